//! One line per acceptance criterion. Oracle values come from
//! `corpus/expectations.json`, written by `scripts/oracle.py`.

use std::process::ExitCode;

use braidix_core::braidindex::{
    braid_index_report, independent_mergeable_set, merge_pair, mergeable_pairs, pair_distance,
};
use braidix_core::castle::{build_castle, find_trap_free_castle, resolve_tree, Variant};
use braidix_core::corpus;
use braidix_core::seifert::{seifert_graph, seifert_stats, SeifertStructure};
use braidix_core::skein::{homfly, mfw_lower_bound};
use braidix_core::verify::{is_decompositions, run_suite, theorem1_applies, SuiteReport};
use braidix_core::{LaurentPoly2, LinkDiagram};
use serde_json::Value;

type Outcome = Result<String, String>;

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle() -> Value {
    serde_json::from_str(corpus::EXPECTATIONS).expect("expectations parse")
}

fn d(name: &str) -> LinkDiagram {
    corpus::diagram(name).expect("bundled diagram")
}

fn circles(d: &LinkDiagram) -> usize {
    SeifertStructure::new(d).circle_count()
}

fn suite(name: &str) -> Outcome {
    let r: SuiteReport = run_suite(name).expect("known suite");
    expect(r.ok() && r.passed > 0, || format!("{} failed: {:?}", r.failed, r.failures))?;
    Ok(format!("{} checks", r.passed))
}

fn oracle_agreement() -> Outcome {
    let o = oracle();
    let mut checked = 0;
    for (name, dg) in corpus::diagrams() {
        let e = &o[name];
        let g = seifert_graph(&dg);
        let mut weights: Vec<usize> = g.edges.iter().map(|e| e.weight).collect();
        weights.sort_unstable();
        let s = seifert_stats(&dg);
        let got = serde_json::json!({
            "homfly": homfly(&dg).to_string(),
            "crossings": dg.crossing_count(),
            "components": dg.component_count(),
            "writhe": dg.writhe(),
            "alternating": dg.is_alternating(),
            "reduced": dg.is_reduced(),
            "seifert_circles": g.vertices,
            "edge_weights": weights,
            "tau_plus": s.tau_plus,
            "tau_minus": s.tau_minus,
            "sigma_plus": s.sigma_plus,
            "sigma_minus": s.sigma_minus,
        });
        for (k, v) in got.as_object().unwrap() {
            expect(&e[k] == v, || format!("{name}.{k}: got {v}, oracle {}", e[k]))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} fields over {} diagrams", corpus::ENTRIES.len()))
}

fn c1() -> Outcome {
    let o = oracle();
    expect(homfly(&d("unknot")).to_string() == "1", || "P(O) != 1".into())?;
    let delta: LaurentPoly2 = "a*z^-1 - a^-1*z^-1".parse().unwrap();
    for n in 2..=5 {
        let got = homfly(&d(&format!("unlink_{n}"))).to_string();
        let want = delta.pow(n as u32 - 1).to_string();
        expect(got == want, || format!("unlink_{n}: {got} != {want}"))?;
        let oracle = o[format!("unlink_{n}")]["homfly"].as_str().unwrap().to_string();
        expect(got == oracle, || format!("unlink_{n}: {got} != oracle {oracle}"))?;
    }
    Ok("O and unlinks 2..5".into())
}

fn c2() -> Outcome {
    let f = d("five_two");
    let g = seifert_graph(&f);
    expect(g.vertices == 4, || format!("n = {}", g.vertices))?;
    expect(g.has_weight_one_edge(), || "no weight-one edge".into())?;
    let p = homfly(&f);
    let span = p.max_a().unwrap() - p.min_a().unwrap();
    expect(span == 4, || format!("a-span {span}"))?;
    expect(mfw_lower_bound(&p) == Ok(3), || "mfw != 3".into())?;
    let m = merge_pair(&f, mergeable_pairs(&g)[0]).map_err(|e| e.to_string())?;
    expect(circles(&m.diagram) == 3, || format!("merged n = {}", circles(&m.diagram)))?;
    expect(homfly(&m.diagram).to_string() == p.to_string(), || "merge changed HOMFLY".into())?;
    let r = braid_index_report(&f);
    expect(r.exact == Some(3), || format!("report {r:?}"))?;
    Ok("n=4, weight-one edge, span 4, mfw 3, merged n=3, exact 3".into())
}

fn c3() -> Outcome {
    let cases = [
        ("trefoil_left", 2),
        ("trefoil_right", 2),
        ("figure_eight", 3),
        ("torus_2_2", 2),
        ("torus_2_3", 2),
        ("torus_2_4", 2),
        ("torus_2_5", 2),
        ("torus_2_6", 2),
    ];
    for (name, b) in cases {
        let dg = d(name);
        let r = braid_index_report(&dg);
        expect(r.exact == Some(b), || format!("{name}: exact {:?}", r.exact))?;
        expect(r.lower == r.n && r.upper == r.n, || format!("{name}: {r:?}"))?;
        let p = homfly(&dg);
        let span = p.max_a().unwrap() - p.min_a().unwrap();
        expect(span == 2 * (r.n as i32 - 1), || format!("{name}: span {span}"))?;
    }
    Ok(format!("{} diagrams", cases.len()))
}

fn c4() -> Outcome {
    suite("extreme-powers")?;
    let o = oracle();
    let mut count = 0;
    for (name, dg) in corpus::diagrams() {
        if !theorem1_applies(&dg) {
            continue;
        }
        let (n, w) = (circles(&dg) as i64, dg.writhe() as i64);
        let e = &o[name];
        let s = seifert_stats(&dg);
        let top = (s.tau_plus + s.tau_minus) as i64 - 2 * s.sigma_minus as i64 - (n - 1);
        expect(e["E"].as_i64() == Some(n - w - 1), || format!("{name}: oracle E {}", e["E"]))?;
        expect(e["e"].as_i64() == Some(-n - w + 1), || format!("{name}: oracle e {}", e["e"]))?;
        expect(e["top_z"].as_i64() == Some(top), || format!("{name}: oracle top z {}", e["top_z"]))?;
        count += 1;
    }
    Ok(format!("{count} reduced alternating diagrams without weight-one edges"))
}

fn c6() -> Outcome {
    let t = resolve_tree(&d("trefoil_left"), Variant::P).map_err(|e| e.to_string())?;
    let want = "-a^4 + a^2*z^2 + 2*a^2";
    expect(t.polynomial().to_string() == want, || format!("tree P on trefoil: {}", t.polynomial()))?;
    suite("trees")
}

fn c7() -> Outcome {
    let mut r = SuiteReport::default();
    is_decompositions(&mut r, 1000, 0x5eed);
    expect(r.ok(), || format!("{:?}", r.failures))?;
    Ok(format!("1000 decompositions, {} checks", r.passed))
}

fn c8() -> Outcome {
    let trap = d("trap_granny");
    let st = SeifertStructure::new(&trap);
    let first = *st.forest.innermost().iter().find(|&&c| !st.circles[c].arcs.is_empty()).unwrap();
    let naive = build_castle(&trap, first).map_err(|e| e.to_string())?;
    expect(!naive.trapped.is_empty(), || "synthetic diagram does not trap".into())?;
    let s = find_trap_free_castle(&trap).map_err(|e| e.to_string())?;
    expect(s.castle.trapped.is_empty(), || "search left a trapped circle".into())?;
    expect((1..=st.circle_count()).contains(&s.steps), || format!("{} steps", s.steps))?;
    let all = suite("castles")?;
    Ok(format!("trap diagram rebased {} time(s); {all}", s.steps))
}

fn c10() -> Outcome {
    let dg = d("merge_pair_sum");
    let g = seifert_graph(&dg);
    let n = g.vertices;
    let (m, pairs) = independent_mergeable_set(&g);
    expect(m >= 2, || format!("m = {m}"))?;
    expect(pair_distance(&g, &pairs[0], &pairs[1]) >= 2, || "pairs too close".into())?;
    let r = braid_index_report(&dg);
    expect(r.upper <= n - 2, || format!("upper {} > n - 2 = {}", r.upper, n - 2))?;
    let mfw = mfw_lower_bound(&homfly(&dg)).unwrap() as usize;
    expect(mfw <= n - m, || format!("mfw {mfw} > n - m"))?;
    for (name, other) in corpus::diagrams() {
        let g = seifert_graph(&other);
        let (m, _) = independent_mergeable_set(&g);
        let mfw = mfw_lower_bound(&homfly(&other)).unwrap() as usize;
        expect(mfw <= g.vertices - m, || format!("{name}: mfw {mfw} > n - m"))?;
    }
    Ok(format!("n={n}, m={m}, upper={}, mfw={mfw}, exact={:?}", r.upper, r.exact))
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, &str, fn() -> Outcome)> = vec![
        ("0", "corpus agrees with the oracle", oracle_agreement),
        ("1", "unknot and unlinks", c1),
        ("2", "5_2 reproduction", c2),
        ("3", "circle count is exact", c3),
        ("4", "extreme-power law", c4),
        ("5", "skein identity", || suite("skein")),
        ("6", "resolving-tree agreement", c6),
        ("7", "IS decomposition counts", c7),
        ("8", "trap-free castles", c8),
        ("9", "Reidemeister invariance", || suite("reidemeister")),
        ("10", "independent mergeable pairs", c10),
    ];
    let mut failed = 0;
    for (id, what, f) in criteria {
        match f() {
            Ok(detail) => println!("criterion {id:>2}: PASS  {what}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2}: FAIL  {what}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
