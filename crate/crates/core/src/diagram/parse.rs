use std::collections::{BTreeMap, HashSet};

use super::{Arc, Crossing, LinkDiagram, Sign};
use crate::error::DiagramError;

enum Token {
    Crossing([Arc; 4]),
    Loop,
}

/// Tokens are `X[a,b,c,d]` and `O`, separated by whitespace (commas between
/// tokens are tolerated, as is a surrounding `PD[...]`). `#` starts a comment.
fn tokenize(text: &str) -> Result<Vec<Token>, DiagramError> {
    let mut tokens = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let ch = chars[i];
            if ch.is_whitespace() || ch == ',' || ch == ']' {
                i += 1;
                continue;
            }
            let start = i;
            let malformed = |end: usize| DiagramError::MalformedToken {
                line: line_no + 1,
                column: start + 1,
                token: chars[start..end.min(chars.len())].iter().collect(),
            };
            if line[line.char_indices().nth(i).map(|(b, _)| b).unwrap_or(0)..].starts_with("PD[") {
                i += 3;
                continue;
            }
            match ch {
                'O' => {
                    i += 1;
                    if i < chars.len() && !(chars[i].is_whitespace() || chars[i] == ',' || chars[i] == ']') {
                        while i < chars.len() && !chars[i].is_whitespace() {
                            i += 1;
                        }
                        return Err(malformed(i));
                    }
                    tokens.push(Token::Loop);
                }
                'X' => {
                    let close = chars[i..].iter().position(|&c| c == ']').map(|p| i + p);
                    let Some(close) = close else {
                        return Err(malformed(chars.len()));
                    };
                    if chars.get(i + 1) != Some(&'[') {
                        return Err(malformed(close + 1));
                    }
                    let body: String = chars[i + 2..close].iter().collect();
                    let nums: Result<Vec<Arc>, _> = body.split(',').map(|s| s.trim().parse::<Arc>()).collect();
                    match nums {
                        Ok(v) if v.len() == 4 && v.iter().all(|&x| x > 0) => {
                            tokens.push(Token::Crossing([v[0], v[1], v[2], v[3]]));
                        }
                        _ => return Err(malformed(close + 1)),
                    }
                    i = close + 1;
                }
                _ => {
                    let mut end = i;
                    while end < chars.len() && !chars[end].is_whitespace() {
                        end += 1;
                    }
                    return Err(malformed(end));
                }
            }
        }
    }
    Ok(tokens)
}

pub(super) fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let tokens = tokenize(text)?;
    let mut tuples = Vec::new();
    let mut free_loops = 0;
    for t in tokens {
        match t {
            Token::Crossing(x) => tuples.push(x),
            Token::Loop => free_loops += 1,
        }
    }
    let d = from_tuples(&tuples, free_loops)?;
    d.check_planar()?;
    Ok(d)
}

/// Validate PD tuples against the labelling contract and derive signs.
pub(super) fn from_tuples(tuples: &[[Arc; 4]], free_loops: usize) -> Result<LinkDiagram, DiagramError> {
    let mut counts: BTreeMap<Arc, usize> = BTreeMap::new();
    for t in tuples {
        for &x in t {
            *counts.entry(x).or_default() += 1;
        }
    }
    if let Some((&label, &count)) = counts.iter().find(|(_, &c)| c != 2) {
        return Err(DiagramError::LabelMultiplicity { label, count });
    }

    // x and y are joined when one of them directly follows the other through a crossing
    let mut joined: HashSet<(Arc, Arc)> = HashSet::new();
    for &[a, b, c, d] in tuples {
        joined.insert((a, c));
        joined.insert((b, d));
        joined.insert((d, b));
    }
    let labels: Vec<Arc> = counts.keys().copied().collect();
    let mut blocks: Vec<(Arc, Arc)> = Vec::new();
    for &x in &labels {
        match blocks.last_mut() {
            Some((_, hi)) if *hi + 1 == x && joined.contains(&(*hi, x)) => *hi = x,
            _ => blocks.push((x, x)),
        }
    }
    for &(lo, hi) in &blocks {
        if !joined.contains(&(hi, lo)) {
            return Err(DiagramError::NonConsecutive(format!(
                "block {lo}..={hi} does not close up from {hi} back to {lo}"
            )));
        }
    }
    let succ = |x: Arc| -> Arc {
        let &(lo, hi) = blocks.iter().find(|&&(lo, hi)| lo <= x && x <= hi).expect("label in a block");
        if x == hi {
            lo
        } else {
            x + 1
        }
    };

    let mut crossings = Vec::with_capacity(tuples.len());
    for (i, &[a, b, c, d]) in tuples.iter().enumerate() {
        if c != succ(a) {
            return Err(DiagramError::UnderStrand { crossing: i, from: a, to: c });
        }
        let sign = if b == succ(d) {
            Sign::Positive
        } else if d == succ(b) {
            Sign::Negative
        } else {
            return Err(DiagramError::OverStrand { crossing: i, b, d });
        };
        let over = match sign {
            Sign::Positive => (d, b),
            Sign::Negative => (b, d),
        };
        crossings.push(Crossing::from_strands((a, c), over, sign));
    }
    LinkDiagram::from_raw(crossings, free_loops)
}
