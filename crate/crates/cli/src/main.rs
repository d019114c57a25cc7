use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use braidix_core::braidindex::braid_index_report;
use braidix_core::castle::{resolve_tree, Variant};
use braidix_core::seifert::{seifert_stats, SeifertStructure};
use braidix_core::skein::{homfly, HomflyAnalysis};
use braidix_core::verify::{run_all, run_suite, SUITES};
use braidix_core::LinkDiagram;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "braidix", version, about = "Seifert graphs, HOMFLY polynomials and braid-index bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a PD code and summarize it
    Parse(Common),
    /// Writhe, components, faces, alternation and reducedness
    Invariants(Common),
    /// Seifert circles, the Seifert graph and crossing statistics
    Seifert(Common),
    /// The HOMFLY polynomial
    Homfly(Common),
    /// Braid-index bounds and certificates, as JSON
    BraidIndex(Common),
    /// Run the property suites over the bundled corpus
    Verify(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// PD code given on the command line
    #[arg(long, conflicts_with = "file")]
    inline: Option<String>,
    /// File holding a PD code
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    /// Graphviz output (seifert only)
    #[arg(long)]
    dot: bool,
    /// Compute through a resolving tree: P, N or generic
    #[arg(long)]
    tree: Option<Variant>,
    /// Print the resolving tree (with --tree)
    #[arg(long, requires = "tree")]
    dump: bool,
    /// Property suite to run (verify only); all suites when absent
    #[arg(long)]
    suite: Option<String>,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl Common {
    fn diagram(&self) -> Result<LinkDiagram, Failure> {
        let text = match (&self.inline, &self.file) {
            (Some(s), None) => s.clone(),
            (None, Some(p)) => std::fs::read_to_string(p)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?,
            _ => return Err(Failure::Usage("exactly one of --inline or --file is required".into())),
        };
        LinkDiagram::parse(&text).map_err(|e| Failure::Usage(format!("invalid PD code: {e}")))
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

fn parse(c: &Common) -> Result<String, Failure> {
    let d = c.diagram()?;
    let v = json!({
        "crossings": d.crossing_count(),
        "components": d.component_count(),
        "free_loops": d.free_loops(),
        "arcs": d.arc_count(),
        "pd": d.to_pd_string(),
    });
    if c.json {
        return Ok(pretty(&v));
    }
    Ok(format!(
        "ok: {} crossings, {} components, {} arcs\n{}\n",
        d.crossing_count(),
        d.component_count(),
        d.arc_count(),
        d.to_pd_string()
    ))
}

fn invariants(c: &Common) -> Result<String, Failure> {
    let d = c.diagram()?;
    let fields = [
        ("crossings", json!(d.crossing_count())),
        ("components", json!(d.component_count())),
        ("writhe", json!(d.writhe())),
        ("faces", json!(d.trace_faces().len())),
        ("alternating", json!(d.is_alternating())),
        ("reduced", json!(d.is_reduced())),
    ];
    if c.json {
        let map: serde_json::Map<String, serde_json::Value> =
            fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        return Ok(pretty(&serde_json::Value::Object(map)));
    }
    let mut s = String::new();
    for (k, v) in fields {
        let _ = writeln!(s, "{k}: {v}");
    }
    Ok(s)
}

fn seifert(c: &Common) -> Result<String, Failure> {
    let d = c.diagram()?;
    let st = SeifertStructure::new(&d);
    let g = st.graph(&d);
    if c.dot {
        return Ok(g.to_dot());
    }
    let stats = seifert_stats(&d);
    if c.json {
        return Ok(pretty(&json!({
            "circles": st.circles,
            "graph": g,
            "stats": stats,
            "forest": st.forest,
        })));
    }
    let mut s = String::new();
    let _ = writeln!(s, "circles: {}", st.circle_count());
    for circle in &st.circles {
        let dir = if circle.clockwise { "cw" } else { "ccw" };
        let arcs: Vec<String> = circle.arcs.iter().map(u32::to_string).collect();
        let _ = writeln!(s, "  {} {dir} [{}]", circle.id, arcs.join(" "));
    }
    let _ = writeln!(s, "edges: {}", g.edges.len());
    for e in &g.edges {
        let _ = writeln!(s, "  {} -- {} weight {} (+{} / -{})", e.u, e.v, e.weight, e.pos, e.neg);
    }
    let _ = writeln!(
        s,
        "tau+ {} tau- {} sigma+ {} sigma- {}",
        stats.tau_plus, stats.tau_minus, stats.sigma_plus, stats.sigma_minus
    );
    Ok(s)
}

fn homfly_cmd(c: &Common) -> Result<String, Failure> {
    let d = c.diagram()?;
    let (poly, tree) = match c.tree {
        Some(v) => {
            let t = resolve_tree(&d, v).map_err(|e| Failure::Compute(e.to_string()))?;
            (t.polynomial(), Some(t))
        }
        None => (homfly(&d), None),
    };
    if c.json {
        let a = HomflyAnalysis::from_poly(poly).map_err(|e| Failure::Compute(e.to_string()))?;
        let mut v = serde_json::to_value(&a).expect("analysis serializes");
        if let Some(t) = &tree {
            v["tree"] = json!(t.variant);
            v["leaves"] = json!(t.leaves.len());
            if c.dump {
                v["nodes"] = json!(t.nodes);
            }
        }
        return Ok(pretty(&v));
    }
    let mut s = format!("{poly}\n");
    if let (Some(t), true) = (&tree, c.dump) {
        s.push_str(&t.dump());
    }
    Ok(s)
}

fn braid_index(c: &Common) -> Result<String, Failure> {
    let d = c.diagram()?;
    let r = braid_index_report(&d);
    Ok(pretty(&serde_json::to_value(&r).expect("report serializes")))
}

fn verify(c: &Common) -> Result<String, Failure> {
    let reports = match &c.suite {
        Some(name) => vec![run_suite(name).ok_or_else(|| {
            Failure::Usage(format!("unknown suite `{name}` (expected one of: {})", SUITES.join(", ")))
        })?],
        None => run_all(),
    };
    let out = if c.json {
        pretty(&serde_json::to_value(&reports).expect("reports serialize"))
    } else {
        let mut s = String::new();
        for r in &reports {
            let status = if r.ok() { "ok" } else { "FAILED" };
            let _ = writeln!(s, "{}: {status} ({} passed, {} failed)", r.name, r.passed, r.failed);
            for f in &r.failures {
                let _ = writeln!(s, "  {f}");
            }
        }
        s
    };
    if reports.iter().all(|r| r.ok()) {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Compute("some properties failed".into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Parse(c) => parse(c),
        Command::Invariants(c) => invariants(c),
        Command::Seifert(c) => seifert(c),
        Command::Homfly(c) => homfly_cmd(c),
        Command::BraidIndex(c) => braid_index(c),
        Command::Verify(c) => verify(c),
    };
    match result {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::Compute(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
