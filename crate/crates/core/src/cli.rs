//! The `surftop` command line.
//!
//! Data goes to `out` in the requested format; diagnostics go to `err`.
//! Exit codes: 0 success, 1 invalid input, 2 internal inconsistency.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use crate::classifier::{classify, monolith_table, transitive_closure_facts, Classification};
use crate::complexes::{
    betti_mod2, grid_torus, kneser_validate, orientation_cover_connected, parse_cycle, parse_distinguished,
    parse_mesh, polarized_double_cover_separates, separates_homology_oracle, FoliatedTriangulation, Triangulation,
};
use crate::covering::{enumerate_totals, BranchedCoverSpec};
use crate::dynamics::{
    dubois_violette_orbit, fold, format_rational, kronecker_verdict, orbit_points, orbit_stats, Rational,
    RotationKind, RotationNumber,
};
use crate::error::{Error, Result};
use crate::signature::SurfaceSig;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "surftop", version, about = "Invariants, foliation verdicts, covers and rotation dynamics of surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Foliability, transitivity, minimality and biminimality of one surface
    Classify {
        /// Signature literal g<G>c<K>n<N>
        #[arg(long)]
        sig: String,
        /// Accept literals mixing handles and cross-caps
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        json: bool,
    },
    /// Every surface up to a rank with its verdicts
    Monolith {
        #[arg(long)]
        max_rank: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
        format: TableFormat,
    },
    /// Transitive surfaces generated by puncturing the base constructions
    Closure {
        #[arg(long)]
        max_rank: u32,
        #[arg(long)]
        json: bool,
    },
    /// Closed totals of branched double covers over a closed base
    Cover {
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long)]
        max_branch: u32,
        #[arg(long)]
        orientable_total: bool,
        /// Drop branched torus totals over a non-orientable base
        #[arg(long)]
        exclude_torus_fixed_point: bool,
        #[arg(long)]
        json: bool,
    },
    /// Whether an edge cycle separates a triangulated surface
    Separate {
        #[arg(long)]
        mesh: PathBuf,
        #[arg(long)]
        cycle: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Orientability via the orientation double cover
    Orientable(MeshArgs),
    /// GF(2) Betti numbers
    Betti(MeshArgs),
    /// Check a foliated triangulation's counting relations
    Kneser {
        #[arg(long, required_unless_present = "grid", requires = "distinguished")]
        mesh: Option<PathBuf>,
        #[arg(long)]
        distinguished: Option<PathBuf>,
        /// Use the built-in m x m grid torus instead of files
        #[arg(long, conflicts_with_all = ["mesh", "distinguished"])]
        grid: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Orbit of a circle rotation given by a continued fraction
    Trace {
        /// Continued fraction `a0;a1,a2,...`
        #[arg(long)]
        cf: String,
        /// Treat the expansion as an exact rational angle
        #[arg(long)]
        rational: bool,
        #[arg(long)]
        steps: usize,
        /// Also fold the orbit by the involution x -> 1 - x
        #[arg(long)]
        quotient: bool,
        /// Starting point `p/q`
        #[arg(long, default_value = "0/1")]
        seed: String,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Debug, Args)]
struct MeshArgs {
    #[arg(long)]
    mesh: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Tsv,
    Json,
    Dot,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<O: Write, E: Write>(argv: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                1
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InternalInconsistency(_) => 2,
                _ => 1,
            }
        }
    }
}

fn dispatch(command: Command) -> Result<String> {
    match command {
        Command::Classify { sig, normalize, json } => {
            let sig = SurfaceSig::parse_literal(&sig, normalize)?;
            Ok(render_classify(&sig, &classify(&sig), json))
        }
        Command::Monolith { max_rank, format } => Ok(render_monolith(max_rank, format)),
        Command::Closure { max_rank, json } => render_closure(max_rank, json),
        Command::Cover { base, degree, max_branch, orientable_total, exclude_torus_fixed_point, json } => {
            let base = SurfaceSig::parse_literal(&base, false)?;
            let spec = BranchedCoverSpec {
                degree,
                base,
                max_branch_points: max_branch,
                orientable_total_required: orientable_total,
                exclude_torus_fixed_point,
            };
            render_cover(&spec, json)
        }
        Command::Separate { mesh, cycle, json } => {
            let tri = load_mesh(&mesh)?;
            let cycle = parse_cycle(&read(&cycle)?, &tri)?;
            let separates = polarized_double_cover_separates(&tri, &cycle)?;
            let oracle = separates_homology_oracle(&tri, &cycle);
            if separates != oracle {
                return Err(Error::InternalInconsistency(format!(
                    "double cover says {separates}, homology says {oracle}"
                )));
            }
            Ok(if json {
                envelope("separate", json!({ "separates": separates, "cycle_length": cycle.len() }))
            } else {
                format!("separates: {separates}\n")
            })
        }
        Command::Orientable(MeshArgs { mesh, json }) => {
            let tri = load_mesh(&mesh)?;
            tri.validate_manifold().map_err(|v| Error::InvalidComplex(v.to_string()))?;
            let connected = orientation_cover_connected(&tri);
            Ok(if json {
                envelope(
                    "orientable",
                    json!({ "orientable": !connected, "orientation_cover_connected": connected }),
                )
            } else {
                format!("orientable: {}\norientation cover connected: {connected}\n", !connected)
            })
        }
        Command::Betti(MeshArgs { mesh, json }) => {
            let tri = load_mesh(&mesh)?;
            let b = betti_mod2(&tri)?;
            let (v, e, f) = tri.counts();
            Ok(if json {
                envelope(
                    "betti",
                    json!({ "b0": b.b0, "b1": b.b1, "b2": b.b2, "euler": b.euler(),
                            "vertices": v, "edges": e, "triangles": f }),
                )
            } else {
                format!("b0 {}\nb1 {}\nb2 {}\neuler {}\n", b.b0, b.b1, b.b2, b.euler())
            })
        }
        Command::Kneser { mesh, distinguished, grid, json } => {
            let ftri = match (grid, mesh, distinguished) {
                (Some(m), _, _) => grid_torus(m)?,
                (None, Some(mesh), Some(dv)) => load_foliated(&mesh, &dv)?,
                _ => return Err(Error::InvalidArgument("need --grid or both --mesh and --distinguished".into())),
            };
            let chi = kneser_validate(&ftri)?;
            let (e0, e1, e2) = ftri.base().counts();
            Ok(if json {
                envelope("kneser", json!({ "euler": chi, "e0": e0, "e1": e1, "e2": e2 }))
            } else {
                format!("e0 {e0}\ne1 {e1}\ne2 {e2}\neuler {chi}\n")
            })
        }
        Command::Trace { cf, rational, steps, quotient, seed, json, csv } => {
            let kind = if rational { RotationKind::Rational } else { RotationKind::TruncatedIrrational };
            let rot = RotationNumber::parse(&cf, kind)?;
            let seed = parse_rational(&seed)?;
            render_trace(&rot, steps, quotient, &seed, json, csv)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn load_mesh(path: &Path) -> Result<Triangulation> {
    parse_mesh(&read(path)?)
}

fn load_foliated(mesh: &Path, dv: &Path) -> Result<FoliatedTriangulation> {
    parse_distinguished(&read(dv)?, load_mesh(mesh)?)
}

fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidArgument(format!("`{text}` is not a rational p/q"));
    let (p, q) = text.split_once('/').unwrap_or((text, "1"));
    let p: i64 = p.trim().parse().map_err(|_| bad())?;
    let q: i64 = q.trim().parse().map_err(|_| bad())?;
    if q <= 0 {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

fn envelope(command: &str, body: Json) -> String {
    let mut obj = serde_json::Map::new();
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    obj.insert("command".into(), json!(command));
    if let Json::Object(fields) = body {
        obj.extend(fields);
    }
    let mut text = serde_json::to_string_pretty(&Json::Object(obj)).expect("json");
    text.push('\n');
    text
}

fn sig_json(sig: &SurfaceSig) -> Json {
    json!({
        "signature": sig.to_string(),
        "name": sig.common_name(),
        "genus": sig.genus(),
        "crosscaps": sig.crosscaps(),
        "punctures": sig.punctures(),
        "rank": sig.rank(),
        "euler": sig.euler(),
        "orientable": sig.is_orientable(),
        "ends": sig.ends(),
    })
}

fn row_json(sig: &SurfaceSig, c: &Classification) -> Json {
    let mut row = sig_json(sig);
    row["classification"] = serde_json::to_value(c).expect("json");
    row["glyph"] = json!(c.glyph().name());
    row
}

fn render_classify(sig: &SurfaceSig, c: &Classification, json: bool) -> String {
    if json {
        return envelope("classify", row_json(sig, c));
    }
    let mut s = String::new();
    let _ = writeln!(s, "signature: {sig} ({})", sig.common_name());
    let _ = writeln!(
        s,
        "euler: {}  ends: {}  orientable: {}  rank: {}",
        sig.euler(),
        sig.ends(),
        sig.is_orientable(),
        sig.rank()
    );
    for (name, v) in
        [("foliable", c.foliable), ("transitive", c.transitive), ("minimal", c.minimal), ("biminimal", c.biminimal)]
    {
        let _ = writeln!(s, "{name}: {v}");
    }
    let _ = writeln!(s, "glyph: {}", c.glyph().name());
    s
}

fn render_monolith(max_rank: u32, format: TableFormat) -> String {
    let table = monolith_table(max_rank);
    match format {
        TableFormat::Json => envelope(
            "monolith",
            json!({ "max_rank": max_rank, "rows": table.iter().map(|(s, c)| row_json(s, c)).collect::<Vec<_>>() }),
        ),
        TableFormat::Tsv => {
            let mut s = String::from(
                "signature\trank\teuler\torientable\tends\tfoliable\ttransitive\tminimal\tbiminimal\ttransitive_provenance\tglyph\n",
            );
            for (sig, c) in &table {
                let _ = writeln!(
                    s,
                    "{sig}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    sig.rank(),
                    sig.euler(),
                    sig.is_orientable(),
                    sig.ends(),
                    c.foliable.value,
                    c.transitive.value,
                    c.minimal.value,
                    c.biminimal.value,
                    c.transitive.provenance,
                    c.glyph().name()
                );
            }
            s
        }
        TableFormat::Dot => render_dot(&table),
    }
}

fn render_dot(table: &[(SurfaceSig, Classification)]) -> String {
    fn shape(glyph: &'static str) -> &'static str {
        match glyph {
            "square" => "box",
            "question" => "diamond",
            other => other,
        }
    }
    let present: std::collections::HashSet<SurfaceSig> = table.iter().map(|(s, _)| *s).collect();
    let mut s = String::from("digraph monolith {\n  rankdir=BT;\n");
    let max_rank = table.iter().map(|(s, _)| s.rank()).max().unwrap_or(0);
    for r in 0..=max_rank {
        let _ = writeln!(s, "  subgraph rank_{r} {{\n    rank=same;");
        for (sig, c) in table.iter().filter(|(s, _)| s.rank() == r) {
            let glyph = c.glyph().name();
            let _ = writeln!(
                s,
                "    \"{sig}\" [label=\"{sig}\\nrank {r}\", shape={}, verdict={glyph}];",
                shape(glyph)
            );
        }
        s.push_str("  }\n");
    }
    for (sig, _) in table {
        let moves: [(&str, SurfaceSig); 3] =
            [("puncture", sig.puncture()), ("crosscap", sig.cross_cap()), ("handle", sig.handle())];
        for (label, target) in moves {
            if present.contains(&target) {
                let _ = writeln!(s, "  \"{sig}\" -> \"{target}\" [label={label}];");
            }
        }
    }
    s.push_str("}\n");
    s
}

fn render_closure(max_rank: u32, json: bool) -> Result<String> {
    let facts = transitive_closure_facts(max_rank)?;
    Ok(if json {
        envelope(
            "closure",
            json!({
                "max_rank": max_rank,
                "facts": facts.iter().map(|(s, v)| {
                    let mut row = sig_json(s);
                    row["verdict"] = serde_json::to_value(v).expect("json");
                    row
                }).collect::<Vec<_>>(),
            }),
        )
    } else {
        let mut s = String::new();
        for (sig, v) in &facts {
            let _ = writeln!(s, "{sig}\t{}\t{}\t{}", sig.rank(), v.value, v.provenance);
        }
        s
    })
}

fn render_cover(spec: &BranchedCoverSpec, json: bool) -> Result<String> {
    let totals = enumerate_totals(spec)?;
    Ok(if json {
        envelope(
            "cover",
            json!({
                "base": spec.base.to_string(),
                "degree": spec.degree,
                "max_branch": spec.max_branch_points,
                "orientable_total": spec.orientable_total_required,
                "exclude_torus_fixed_point": spec.exclude_torus_fixed_point,
                "totals": totals.iter().map(|t| json!({
                    "total": t.total.to_string(),
                    "name": t.total.common_name(),
                    "euler": t.total.euler(),
                    "branch_points": t.branch_points,
                })).collect::<Vec<_>>(),
            }),
        )
    } else {
        let mut s = String::new();
        if totals.is_empty() {
            s.push_str("no consistent cover\n");
        }
        for t in &totals {
            let _ = writeln!(s, "{}\teuler {}\tbranch {}\t{}", t.total, t.total.euler(), t.branch_points, t.total.common_name());
        }
        s
    })
}

fn render_trace(
    rot: &RotationNumber,
    steps: usize,
    quotient: bool,
    seed: &Rational,
    json: bool,
    csv: bool,
) -> Result<String> {
    if steps == 0 {
        return Err(Error::InvalidArgument("--steps must be at least 1".into()));
    }
    let alpha = rot.value()?;
    let points = orbit_points(&alpha, steps, seed);
    if csv {
        let mut s = String::from(if quotient { "index,point,folded\n" } else { "index,point\n" });
        for (i, p) in points.iter().enumerate() {
            if quotient {
                let _ = writeln!(s, "{i},{},{}", format_rational(p), format_rational(&fold(p)));
            } else {
                let _ = writeln!(s, "{i},{}", format_rational(p));
            }
        }
        return Ok(s);
    }
    let stats = orbit_stats(&alpha, steps)?;
    let report = kronecker_verdict(rot)?;
    let folded = if quotient { Some(dubois_violette_orbit(&alpha, steps, seed)?) } else { None };
    if json {
        let mut body = json!({
            "cf": rot.to_string(),
            "kind": rot.kind(),
            "alpha": format_rational(&alpha),
            "seed": format_rational(seed),
            "steps": steps,
            "points": points.iter().map(format_rational).collect::<Vec<_>>(),
            "stats": stats,
            "kronecker": report,
        });
        if let Some(f) = folded {
            body["quotient"] = serde_json::to_value(f).expect("json");
        }
        return Ok(envelope("trace", body));
    }
    let mut s = String::new();
    let _ = writeln!(s, "alpha: {} ({:?}, cf {})", format_rational(&alpha), rot.kind(), rot);
    let _ = writeln!(s, "verdict: {}", report.verdict);
    if let Some(p) = report.period {
        let _ = writeln!(s, "period: {p}");
    }
    let _ = writeln!(s, "distinct points: {}", stats.points.len());
    let _ = writeln!(s, "max gap: {}", format_rational(&stats.max_gap));
    let _ = writeln!(s, "distinct gaps: {}", stats.distinct_gaps);
    if let Some(f) = folded {
        let _ = writeln!(s, "folded points: {}", f.points.len());
        let _ = writeln!(s, "folded max gap: {}", format_rational(&f.max_gap));
        let hits: Vec<String> = f.separatrix_hits.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "separatrix hits: {}", if hits.is_empty() { "none".into() } else { hits.join(" ") });
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("surftop").chain(args.iter().copied()).map(String::from).collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn unknown_command_exits_one_with_usage() {
        let (code, out, err) = call(&["frobnicate"]);
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert!(err.contains("Usage"));
    }

    #[test]
    fn unknown_flag_rejected() {
        let (code, _, err) = call(&["classify", "--sig", "g0c0n3", "--bogus"]);
        assert_eq!(code, 1);
        assert!(!err.is_empty());
    }

    #[test]
    fn mixed_literal_needs_normalize() {
        assert_eq!(call(&["classify", "--sig", "g1c1n0"]).0, 1);
        let (code, out, _) = call(&["classify", "--sig", "g1c1n0", "--normalize"]);
        assert_eq!(code, 0);
        assert!(out.contains("g0c3n0"));
    }

    #[test]
    fn rational_seed_parsing() {
        assert_eq!(parse_rational("3/6").unwrap(), Rational::new(1, 2));
        assert_eq!(parse_rational("2").unwrap(), Rational::new(2, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("monolith"));
    }
}
