//! HOMFLY polynomials by skein recursion, leaf contributions of resolving
//! trees, and the a-span bounds.
//!
//! Normalization: `a P(D+) - a^-1 P(D-) = z P(D0)`, `P(unknot) = 1`, so an
//! `n`-component unlink evaluates to `((a - a^-1) z^-1)^(n-1)`.
//!
//! The generic tree fixes the base point at the smallest label of the first
//! component and branches on the first crossing met from below. Flipping
//! leaves labels alone, so the descending prefix of the traversal grows with
//! every flip, and smoothing removes a crossing; the recursion terminates.
//! Once the first component is descending it lies above everything it
//! meets and splits off as an unknot.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use serde::Serialize;

use crate::diagram::{Arc, LinkDiagram, Sign, Strand};
use crate::error::SkeinError;
use crate::poly::LaurentPoly2;

/// Bookkeeping for one leaf of a resolving tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeafRecord {
    /// Number of components of the leaf.
    pub gamma: usize,
    /// Writhe of the leaf diagram.
    pub w: i32,
    /// Crossings smoothed on the way down.
    pub t: usize,
    /// Negative crossings among them.
    pub t_minus: usize,
    /// Loop crossings of each component, from its starting point.
    pub loop_counts: Vec<usize>,
}

/// `(-1)^t- z^t a^(w(U) - w(D)) ((a - a^-1) z^-1)^(gamma - 1)`
pub fn leaf_contribution(leaf: &LeafRecord, base_writhe: i32) -> LaurentPoly2 {
    let sign = if leaf.t_minus % 2 == 0 { 1 } else { -1 };
    LaurentPoly2::unlink(leaf.gamma).shift(sign, leaf.w - base_writhe, leaf.t as i32)
}

/// Edge weight for flipping a crossing of the given sign.
pub fn flip_weight(sign: Sign) -> LaurentPoly2 {
    match sign {
        Sign::Positive => LaurentPoly2::monomial(1, -2, 0),
        Sign::Negative => LaurentPoly2::monomial(1, 2, 0),
    }
}

/// Edge weight for smoothing a crossing of the given sign.
pub fn smooth_weight(sign: Sign) -> LaurentPoly2 {
    match sign {
        Sign::Positive => LaurentPoly2::monomial(1, -1, 1),
        Sign::Negative => LaurentPoly2::monomial(-1, 1, 1),
    }
}

type Key = (Vec<[Arc; 4]>, Vec<Arc>, usize);

/// Memoizing HOMFLY evaluator. Safe to share between threads; concurrent
/// callers may duplicate work but always agree.
#[derive(Debug, Default)]
pub struct HomflyEngine {
    memo: RwLock<HashMap<Key, LaurentPoly2>>,
}

impl HomflyEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cached(&self) -> usize {
        self.memo.read().map(|m| m.len()).unwrap_or(0)
    }

    pub fn homfly(&self, d: &LinkDiagram) -> LaurentPoly2 {
        if d.crossing_count() == 0 {
            return LaurentPoly2::unlink(d.component_count().max(1));
        }
        let key = d.canonical_key();
        if let Some(p) = self.memo.read().ok().and_then(|m| m.get(&key).cloned()) {
            return p;
        }
        let p = match first_ascending(d) {
            Some(i) => {
                let sign = d.crossings()[i].sign;
                let flipped = d.flip_crossing(i).expect("crossing id in range");
                let smoothed = d.smooth_crossing(i).expect("crossing id in range");
                &flip_weight(sign) * &self.homfly(&flipped) + &smooth_weight(sign) * &self.homfly(&smoothed)
            }
            None if d.component_count() == 1 => LaurentPoly2::one(),
            None => &LaurentPoly2::delta() * &self.homfly(&d.remove_component(0)),
        };
        if let Ok(mut m) = self.memo.write() {
            m.insert(key, p.clone());
        }
        p
    }
}

/// First crossing met from below when walking the first component from its
/// smallest label.
fn first_ascending(d: &LinkDiagram) -> Option<usize> {
    let (start, _) = *d.component_blocks().first()?;
    let mut seen = vec![false; d.crossing_count()];
    let mut cur = start;
    loop {
        let (i, s) = d.ends(cur).head;
        if !seen[i] {
            seen[i] = true;
            if s == Strand::Under {
                return Some(i);
            }
        }
        cur = d.next_arc(cur);
        if cur == start {
            return None;
        }
    }
}

fn engine() -> &'static HomflyEngine {
    static ENGINE: OnceLock<HomflyEngine> = OnceLock::new();
    ENGINE.get_or_init(HomflyEngine::new)
}

/// The HOMFLY polynomial, using a process-wide memo table.
pub fn homfly(d: &LinkDiagram) -> LaurentPoly2 {
    engine().homfly(d)
}

/// `(E, e)`: the largest and smallest powers of `a`.
pub fn a_span_bounds(p: &LaurentPoly2) -> Result<(i32, i32), SkeinError> {
    match (p.max_a(), p.min_a()) {
        (Some(hi), Some(lo)) => Ok((hi, lo)),
        _ => Err(SkeinError::ZeroPolynomial),
    }
}

/// Morton-Franks-Williams lower bound `a-span / 2 + 1`.
pub fn mfw_lower_bound(p: &LaurentPoly2) -> Result<i32, SkeinError> {
    let (hi, lo) = a_span_bounds(p)?;
    let span = hi - lo;
    if span % 2 != 0 {
        return Err(SkeinError::OddSpan(span));
    }
    Ok(span / 2 + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomflyAnalysis {
    #[serde(serialize_with = "crate::poly::serialize_display")]
    pub poly: LaurentPoly2,
    #[serde(rename = "E")]
    pub max_a: i32,
    #[serde(rename = "e")]
    pub min_a: i32,
    pub a_span: i32,
    pub mfw: i32,
}

impl HomflyAnalysis {
    pub fn of(d: &LinkDiagram) -> Result<Self, SkeinError> {
        Self::from_poly(homfly(d))
    }

    pub fn from_poly(poly: LaurentPoly2) -> Result<Self, SkeinError> {
        let (max_a, min_a) = a_span_bounds(&poly)?;
        let mfw = mfw_lower_bound(&poly)?;
        Ok(HomflyAnalysis { poly, max_a, min_a, a_span: max_a - min_a, mfw })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid;
    use crate::diagram::tests::{CURL, FIGURE_EIGHT, HOPF, LEFT_TREFOIL};
    use crate::diagram::{add_curl, mirror};

    fn pd(s: &str) -> LinkDiagram {
        LinkDiagram::parse(s).unwrap()
    }

    fn p(s: &str) -> LaurentPoly2 {
        s.parse().unwrap()
    }

    #[test]
    fn unknot_and_unlinks() {
        assert_eq!(homfly(&pd("O")).to_string(), "1");
        assert_eq!(homfly(&pd("O O")).to_string(), "a*z^-1 - a^-1*z^-1");
        assert_eq!(homfly(&pd(CURL)), LaurentPoly2::one());
    }

    #[test]
    fn trefoils() {
        let left = homfly(&pd(LEFT_TREFOIL));
        assert_eq!(left.to_string(), "-a^4 + a^2*z^2 + 2*a^2");
        let right = homfly(&mirror(&pd(LEFT_TREFOIL)));
        assert_eq!(right, p("-a^-4 + a^-2*z^2 + 2*a^-2"));
    }

    #[test]
    fn figure_eight() {
        assert_eq!(homfly(&pd(FIGURE_EIGHT)), p("a^2 - 1 - z^2 + a^-2"));
    }

    #[test]
    fn hopf() {
        // positive Hopf link: a^-1 z - a^-3 z^-1 + a^-1 z^-1 ... checked by the skein identity
        let h = homfly(&pd(HOPF));
        let smoothed = homfly(&pd(HOPF).smooth_crossing(0).unwrap());
        let flipped = homfly(&pd(HOPF).flip_crossing(0).unwrap());
        assert_eq!(h.shift(1, 1, 0) - flipped.shift(1, -1, 0), smoothed.shift(1, 0, 1));
        assert_eq!(flipped, LaurentPoly2::unlink(2));
    }

    #[test]
    fn leaf_contributions() {
        let leaf = |gamma, w, t, t_minus| LeafRecord { gamma, w, t, t_minus, loop_counts: vec![0; gamma] };
        assert_eq!(leaf_contribution(&leaf(1, 3, 0, 0), 3), LaurentPoly2::one());
        assert_eq!(leaf_contribution(&leaf(2, 2, 1, 0), 3), p("1 - a^-2"));
        assert_eq!(leaf_contribution(&leaf(1, 0, 2, 1), 0), p("-z^2"));
    }

    #[test]
    fn spans() {
        assert_eq!(a_span_bounds(&homfly(&pd(LEFT_TREFOIL))), Ok((4, 2)));
        assert_eq!(a_span_bounds(&LaurentPoly2::one()), Ok((0, 0)));
        assert_eq!(a_span_bounds(&p("a^2 - 1 - z^2 + a^-2")), Ok((2, -2)));
        assert_eq!(a_span_bounds(&LaurentPoly2::zero()), Err(SkeinError::ZeroPolynomial));
        assert_eq!(mfw_lower_bound(&homfly(&pd(LEFT_TREFOIL))), Ok(2));
        assert_eq!(mfw_lower_bound(&LaurentPoly2::one()), Ok(1));
        assert_eq!(mfw_lower_bound(&p("a + 1")), Err(SkeinError::OddSpan(1)));
    }

    #[test]
    fn invariance_under_moves() {
        let t = pd(LEFT_TREFOIL);
        let base = homfly(&t);
        for arc in 1..=6 {
            for sign in [Sign::Positive, Sign::Negative] {
                for under_first in [true, false] {
                    assert_eq!(homfly(&add_curl(&t, arc, sign, under_first).unwrap()), base);
                }
            }
        }
    }

    #[test]
    fn torus_links() {
        for k in 2..=6 {
            let (hi, lo) = a_span_bounds(&homfly(&braid::torus_2k(k))).unwrap();
            assert_eq!(hi - lo, 2);
        }
    }

    #[test]
    fn shared_engine_across_threads() {
        let e = HomflyEngine::new();
        let d = pd(FIGURE_EIGHT);
        let results: Vec<LaurentPoly2> = std::thread::scope(|s| {
            let hs: Vec<_> = (0..4).map(|_| s.spawn(|| e.homfly(&d))).collect();
            hs.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert!(results.windows(2).all(|w| w[0] == w[1]));
        assert!(e.cached() > 0);
    }
}
