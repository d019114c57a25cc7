use super::*;
use crate::braid;
use crate::diagram::tests::{CURL, FIGURE_EIGHT, HOPF, LEFT_TREFOIL};
use crate::diagram::{add_curl, mirror, Sign};
use crate::skein::homfly;

const FIVE_TWO: &str = "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]";

fn pd(s: &str) -> LinkDiagram {
    LinkDiagram::parse(s).unwrap()
}

fn samples() -> Vec<LinkDiagram> {
    let mut v = vec![pd(LEFT_TREFOIL), mirror(&pd(LEFT_TREFOIL)), pd(FIGURE_EIGHT), pd(HOPF), pd(CURL), pd(FIVE_TWO)];
    v.push(add_curl(&pd(FIGURE_EIGHT), 3, Sign::Negative, true).unwrap());
    for k in 2..=5 {
        v.push(braid::torus_2k(k));
    }
    for word in [&[1, -2, 1, -2][..], &[1, 1, 2, -1, 2], &[1, 2, 3, 1, 2, 3], &[1, -2, 3, -2, 1, 1], &[2, 2, 1, -3, 1, 2]] {
        let strands = word.iter().map(|x: &i32| x.unsigned_abs() as usize).max().unwrap() + 1;
        v.push(braid::closure(strands, word).unwrap());
    }
    v
}

/// Alternating braid closures in which every generator occurs at least
/// twice: reduced, alternating, no weight-one edge.
fn alternating_samples() -> Vec<LinkDiagram> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let mut out = Vec::new();
    for _ in 0..24 {
        let strands = rng.gen_range(2..=4);
        let mut word = Vec::new();
        for g in 1..strands as i32 {
            for _ in 0..rng.gen_range(2..=3) {
                word.push(g);
            }
        }
        for _ in 0..rng.gen_range(0..=2) {
            word.push(rng.gen_range(1..strands as i32));
        }
        for k in (1..word.len()).rev() {
            word.swap(k, rng.gen_range(0..=k));
        }
        let word: Vec<i32> = word.into_iter().map(|g| if g % 2 == 1 { g } else { -g }).collect();
        out.push(braid::closure(strands, &word).unwrap());
    }
    out
}

fn leaf_exponent_is(leaf: &crate::skein::LeafRecord, top: bool, n: usize) -> bool {
    let g = leaf.gamma as i32;
    if top {
        g + leaf.w == n as i32
    } else {
        g - leaf.w == n as i32
    }
}

#[test]
fn trefoil_castle() {
    let c = find_trap_free_castle(&pd(LEFT_TREFOIL)).unwrap();
    assert_eq!(c.steps, 0);
    assert_eq!(c.castle.floors.len(), 2);
    assert_eq!(c.castle.ladders.len(), 3);
    assert_eq!(c.castle.height(), 2);
    assert!(c.castle.trapped.is_empty());
    assert_eq!(c.castle.floors[0].crossings.len(), 3);
}

#[test]
fn unknot_castle_and_tree() {
    let c = find_trap_free_castle(&pd("O")).unwrap().castle;
    assert_eq!(c.floors.len(), 1);
    assert!(c.ladders.is_empty());
    let t = resolve_tree(&pd("O"), Variant::P).unwrap();
    assert_eq!(t.leaves.len(), 1);
    assert_eq!(t.polynomial(), crate::poly::LaurentPoly2::one());
    assert!(t.nodes.is_empty());
}

#[test]
fn castles_rejects() {
    let d = pd(FIGURE_EIGHT);
    let st = SeifertStructure::new(&d);
    let outer = (0..st.circle_count()).find(|&c| !st.forest.is_innermost(c)).unwrap();
    assert_eq!(build_castle(&d, outer), Err(CastleError::NotInnermost(outer)));
    assert_eq!(build_castle(&d, 99), Err(CastleError::UnknownCircle(99)));
}

#[test]
fn ladders_join_consecutive_floors() {
    for d in samples().into_iter().chain(alternating_samples()) {
        let st = SeifertStructure::new(&d);
        let c = find_trap_free_castle(&d).unwrap().castle;
        for l in &c.ladders {
            let (lo, up) = (&c.floors[l.lower], &c.floors[l.upper]);
            assert_eq!(up.below, Some(l.lower));
            assert!(lo.crossings.contains(&l.crossing) && up.crossings.contains(&l.crossing));
            assert_eq!(st.other_circle(l.crossing, lo.circle), up.circle);
        }
        for t in &c.towers {
            assert_eq!(t[0], 0);
            assert!(t.windows(2).all(|w| c.floors[w[1]].below == Some(w[0])));
        }
    }
}

#[test]
fn trees_agree_with_homfly() {
    for d in samples().into_iter().chain(alternating_samples()) {
        let p = homfly(&d);
        for v in [Variant::P, Variant::N, Variant::Generic] {
            let t = resolve_tree(&d, v).unwrap();
            assert_eq!(t.polynomial(), p, "{v:?} on {}", d.to_pd_string());
        }
    }
}

#[test]
fn leaf_bounds() {
    for d in samples().into_iter().chain(alternating_samples()) {
        for v in [Variant::P, Variant::N] {
            let t = resolve_tree(&d, v).unwrap();
            for leaf in &t.leaves {
                assert!(leaf.gamma as i32 + leaf.w.abs() <= t.seifert_circles as i32, "{v:?} {leaf:?} on {}", d.to_pd_string());
                assert!(leaf.w.unsigned_abs() as usize <= leaf.loop_counts.iter().sum::<usize>());
                assert!(leaf.t_minus <= leaf.t);
                assert_eq!(leaf.loop_counts.len(), leaf.gamma);
            }
        }
    }
}

#[test]
fn extreme_leaves_are_is_circles() {
    for d in alternating_samples().into_iter().chain([pd(LEFT_TREFOIL), pd(FIGURE_EIGHT)]) {
        let n = SeifertStructure::new(&d).circle_count();
        for (v, top) in [(Variant::P, true), (Variant::N, false)] {
            let t = resolve_tree(&d, v).unwrap();
            let extreme: Vec<_> = t.leaves.iter().filter(|l| leaf_exponent_is(l, top, n)).collect();
            assert!(!extreme.is_empty());
            for l in extreme {
                assert!(l.loop_counts.iter().all(|&k| k == 0), "{v:?} {l:?} on {}", d.to_pd_string());
            }
        }
    }
}

#[test]
fn step_one_leaf_exists() {
    for d in alternating_samples().into_iter().chain([pd(LEFT_TREFOIL), pd(FIGURE_EIGHT)]) {
        let n = SeifertStructure::new(&d).circle_count();
        let s = crate::seifert::seifert_stats(&d);
        let p = resolve_tree(&d, Variant::P).unwrap();
        assert!(p.leaves.iter().any(|l| l.gamma == n
            && l.t == s.tau_plus + s.tau_minus - 2 * s.sigma_minus
            && l.t_minus == s.tau_minus - 2 * s.sigma_minus));
        let m = resolve_tree(&d, Variant::N).unwrap();
        assert!(m.leaves.iter().any(|l| l.gamma == n
            && l.t == s.tau_plus + s.tau_minus - 2 * s.sigma_plus
            && l.t_minus == s.tau_minus));
    }
}

#[test]
fn loop_crossings_of_curl_and_trefoil() {
    let curl = pd(CURL);
    assert_eq!(loop_crossings(&curl, 1), vec![0]);
    let dec = is_decomposition(&curl, &[1]).unwrap();
    assert_eq!(dec.circles.len(), 2);
    assert_eq!(dec.omega, vec![0]);

    let t = pd(LEFT_TREFOIL);
    assert_eq!(loop_crossings(&t, 1).len(), 1);
    let dec = is_decomposition(&t, &[1]).unwrap();
    assert_eq!(dec.circles.len(), 2);
    assert_eq!(dec.loop_crossings[0][0].1, Sign::Negative);
    let (curves, simple) = smoothing_curves(&t, &dec.omega);
    assert_eq!(curves.len(), 2);
    assert!(simple);
    assert!(!smoothing_curves(&t, &[]).1);
}

#[test]
fn decomposition_rejects_bad_starts() {
    let h = pd(HOPF);
    assert!(is_decomposition(&h, &[1]).is_err());
    assert!(is_decomposition(&h, &[1, 1]).is_err());
    assert_eq!(is_decomposition(&h, &[1, 3]).unwrap().omega, Vec::<usize>::new());
}

#[test]
fn walks() {
    let d = pd(FIVE_TWO);
    let st = SeifertStructure::new(&d);
    for c in &st.circles {
        assert_eq!(seifert_walk(&d, &c.arcs).unwrap(), vec![c.id]);
    }
    let dec = is_decomposition(&d, &[1]).unwrap();
    for circle in dec.circles.iter().filter(|c| !c.is_empty()) {
        let w = seifert_walk(&d, circle).unwrap();
        assert!(!w.is_empty());
    }
    assert!(seifert_walk(&d, &[1, 3]).is_err());
    assert!(seifert_walk(&d, &d.component_arcs(0).collect::<Vec<_>>()).is_err());
    assert_eq!(find_cycle(&[0, 1, 2, 1]), None);
    assert_eq!(find_cycle(&[0, 1, 2, 3]), Some(vec![0, 1, 2, 3]));
    assert_eq!(find_cycle(&[4, 0, 1, 0, 2, 3]), Some(vec![4, 0, 2, 3]));
}

#[test]
fn dump_format() {
    let t = resolve_tree(&pd(HOPF), Variant::Generic).unwrap();
    let dump = t.dump();
    let first = dump.lines().next().unwrap();
    assert!(first.starts_with("crossing=") && first.contains(" op=flip monomial=a^-2"));
    assert!(dump.lines().any(|l| l.starts_with("  ")));
    assert_eq!(dump.lines().count(), t.nodes.len());
}


#[test]
fn walk_with_a_four_cycle() {
    let d = crate::corpus::diagram("walk_cycle").unwrap();
    let n = SeifertStructure::new(&d).circle_count();
    let dec = is_decomposition(&d, &[2]).unwrap();
    let cycle = dec.circles.iter().find_map(|c| find_cycle(&seifert_walk(&d, c).unwrap())).unwrap();
    assert_eq!(cycle.len(), 4);
    assert!(dec.circles.len() <= n - 2);
}

#[test]
fn figure_eight_walk_alternates() {
    let d = pd(FIGURE_EIGHT);
    for start in d.arcs() {
        let dec = is_decomposition(&d, &[start]).unwrap();
        for c in &dec.circles {
            let w = seifert_walk(&d, c).unwrap();
            assert!(find_cycle(&w).is_none());
        }
    }
}
