use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use pts_core::axioms::{
    check_poisson, check_pts, check_pts_sampled, pts_from_operations, pts_from_poisson, AxiomViolation, PTSStructure,
    StructureFile,
};
use pts_core::envelope::{
    build_envelope, check_canonical_map, check_product_consistency, verify_envelope, EXHAUSTIVE_ENVELOPE_BASE_DIM,
};
use pts_core::exactla::Delta;
use pts_core::freepoisson::{family_counts, DEGREE5_FAMILY_COUNTS};
use pts_core::identities::{default_deltas, derive_identities, PipelineReport};
use pts_core::scalar::Scalar;
use pts_core::selftest::{run_selftest, SelfTestConfig};
use pts_core::ternary::{type_counts, DEGREE5_TYPE_COUNTS};
use pts_core::{Error, Rational, Result};

use crate::Format;

const SHOWN_VIOLATIONS: usize = 10;

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| io_error(path, e))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| io_error(path, e))
}

fn load(path: &Path) -> Result<StructureFile<Rational>> {
    StructureFile::parse(&read(path)?).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        e => e,
    })
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn violation_lines<T: Scalar>(vs: &[AxiomViolation<Vec<T>>]) -> Vec<String> {
    vs.iter()
        .take(SHOWN_VIOLATIONS)
        .map(|v| {
            let s = v.to_strings();
            format!("  {} at {:?}: {} != {}", s.axiom, s.indices, s.left, s.right)
        })
        .collect()
}

fn violations_json<T: Scalar>(vs: &[AxiomViolation<Vec<T>>]) -> Value {
    json!(vs.iter().map(AxiomViolation::to_strings).collect::<Vec<_>>())
}

fn shape_label(shape: &[usize]) -> String {
    shape.iter().map(ToString::to_string).collect()
}

pub fn tables(format: Format) -> Result<bool> {
    let types = type_counts(5)?;
    let families = family_counts(5)?;
    let family_sizes: Vec<usize> = families.iter().map(|(_, c)| *c).collect();
    let ok = types == DEGREE5_TYPE_COUNTS && family_sizes == DEGREE5_FAMILY_COUNTS;
    match format {
        Format::Json => print_json(&json!({
            "ternary": types.iter().zip(DEGREE5_TYPE_COUNTS).enumerate().map(|(i, (c, p))| {
                json!({"type": i + 1, "computed": c, "published": p})
            }).collect::<Vec<_>>(),
            "ternary_total": types.iter().sum::<usize>(),
            "poisson": families.iter().zip(DEGREE5_FAMILY_COUNTS).map(|((s, c), p)| {
                json!({"shape": shape_label(s), "computed": c, "published": p})
            }).collect::<Vec<_>>(),
            "poisson_total": family_sizes.iter().sum::<usize>(),
            "match": ok,
        })),
        Format::Text => {
            println!("ternary monomials of degree 5");
            println!("{:>6} {:>9} {:>10}", "type", "computed", "published");
            for (i, (c, p)) in types.iter().zip(DEGREE5_TYPE_COUNTS).enumerate() {
                println!("{:>6} {c:>9} {p:>10}", i + 1);
            }
            println!(
                "{:>6} {:>9} {:>10}",
                "total",
                types.iter().sum::<usize>(),
                DEGREE5_TYPE_COUNTS.iter().sum::<usize>()
            );
            println!();
            println!("Poisson monomials of degree 5");
            println!("{:>6} {:>9} {:>10}", "shape", "computed", "published");
            for ((s, c), p) in families.iter().zip(DEGREE5_FAMILY_COUNTS) {
                println!("{:>6} {c:>9} {p:>10}", shape_label(s));
            }
            println!(
                "{:>6} {:>9} {:>10}",
                "total",
                family_sizes.iter().sum::<usize>(),
                DEGREE5_FAMILY_COUNTS.iter().sum::<usize>()
            );
            println!();
            println!("{}", if ok { "all counts match" } else { "counts differ" });
        }
    }
    Ok(ok)
}

fn derive_text(r: &PipelineReport) {
    println!("degree {}", r.degree);
    println!("ternary dimension {}", r.dim_t);
    println!("Poisson dimension {}", r.dim_p);
    println!("rank {}", r.rank);
    println!("nullity {}", r.nullity);
    println!("largest transform entry {}", r.transform_max_entry);
    println!("basis size initial {:.6}", r.size_initial);
    for p in &r.lll_passes {
        println!(
            "basis size after LLL delta={} {:.6} (vector sizes {}..{})",
            p.delta, p.basis_size, p.min_vector_size, p.max_vector_size
        );
    }
    let none = || "none".to_string();
    println!("sorted first vector size {}", r.sorted_first_vector_size.clone().unwrap_or_else(none));
    println!("sorted last vector size {}", r.sorted_last_vector_size.clone().unwrap_or_else(none));
    println!("generators {} (reference {})", r.generator_count, r.reference_generator_count);
    println!("generator orbit span rank {}", r.generator_span_rank);
    println!("defining relations hold {}", r.defining_relations_hold);
    println!("defining relations orbit span rank {}", r.defining_relations_span_rank);
    println!("defining relations complete {}", r.defining_relations_complete);
    println!("relations 1-8 orbit span rank {}", r.first_eight_span_rank);
    for (i, g) in r.generators.iter().enumerate() {
        println!("generator {}: {}", i + 1, g.display);
    }
}

pub fn derive(degree: usize, deltas: Vec<Delta>, out: Option<PathBuf>, format: Format) -> Result<bool> {
    let deltas = if deltas.is_empty() { default_deltas() } else { deltas };
    let (report, artifacts) = derive_identities(degree, &deltas)?;
    if let Some(dir) = out {
        fs::create_dir_all(&dir).map_err(|e| io_error(&dir, e))?;
        write(&dir.join("report.json"), &serde_json::to_string_pretty(&report)?)?;
        write(&dir.join("expansion.txt"), &artifacts.expansion.to_text())?;
        write(&dir.join("nullspace.txt"), &artifacts.nullspace.to_text())?;
        write(&dir.join("reduced.txt"), &artifacts.reduced.to_text())?;
        write(&dir.join("initial_sizes.json"), &serde_json::to_string_pretty(&artifacts.initial_sizes)?)?;
    }
    match format {
        Format::Json => print_json(&serde_json::to_value(&report)?),
        Format::Text => derive_text(&report),
    }
    Ok(report.defining_relations_hold && report.generator_span_rank == report.nullity)
}

fn pts_violations(t: &PTSStructure<Rational>, seed: u64, trials: Option<usize>) -> Vec<AxiomViolation<Vec<Rational>>> {
    match trials {
        Some(n) => check_pts_sampled(t, seed, n),
        None => check_pts(t),
    }
}

pub fn verify(path: &Path, seed: u64, trials: Option<usize>, format: Format) -> Result<bool> {
    let mode = if trials.is_some() { "sampled" } else { "exhaustive" };
    let (kind, dim, poisson, pts) = match load(path)? {
        StructureFile::Poisson(p) => {
            let pv = check_poisson(&p);
            let tv = pts_violations(&pts_from_operations(&p), seed, trials);
            ("poisson", p.dim(), Some(pv), tv)
        }
        StructureFile::Pts(t) => ("pts", t.dim(), None, pts_violations(&t, seed, trials)),
    };
    let ok = poisson.as_ref().is_none_or(Vec::is_empty) && pts.is_empty();
    match format {
        Format::Json => print_json(&json!({
            "kind": kind,
            "dim": dim,
            "mode": mode,
            "poisson_violations": poisson.as_deref().map(violations_json),
            "pts_violations": violations_json(&pts),
            "ok": ok,
        })),
        Format::Text => {
            println!("{kind} structure of dimension {dim}");
            if let Some(pv) = &poisson {
                println!("Poisson axioms: {} violation(s)", pv.len());
                violation_lines(pv).iter().for_each(|l| println!("{l}"));
            }
            println!("triple system axioms ({mode}): {} violation(s)", pts.len());
            violation_lines(&pts).iter().for_each(|l| println!("{l}"));
        }
    }
    Ok(ok)
}

pub fn envelope(path: &Path, out: Option<PathBuf>, force: bool, format: Format) -> Result<bool> {
    let t = match load(path)? {
        StructureFile::Poisson(p) if force => pts_from_operations(&p),
        StructureFile::Poisson(p) => pts_from_poisson(&p)?,
        StructureFile::Pts(t) => t,
    };
    let e = build_envelope(&t, force)?;
    let axioms = verify_envelope(&e);
    let map = check_canonical_map(&e);
    let consistency = check_product_consistency(&e);
    if let Some(file) = out {
        write(&file, &StructureFile::Poisson(e.algebra.clone()).to_json_string())?;
    }
    let mode = if e.base_dim() <= EXHAUSTIVE_ENVELOPE_BASE_DIM { "exhaustive" } else { "sampled" };
    let ok = axioms.is_empty() && map.is_empty() && consistency.is_empty();
    match format {
        Format::Json => print_json(&json!({
            "base_dim": e.base_dim(),
            "dim": e.dim(),
            "mode": mode,
            "axiom_violations": violations_json(&axioms),
            "canonical_map_violations": violations_json(&map),
            "consistency_violations": violations_json(&consistency),
            "ok": ok,
        })),
        Format::Text => {
            println!("base dimension {}", e.base_dim());
            println!("dim U = {} + {}^2 = {}", e.base_dim(), e.base_dim(), e.dim());
            println!("Poisson axioms ({mode}): {} violation(s)", axioms.len());
            violation_lines(&axioms).iter().for_each(|l| println!("{l}"));
            println!("canonical map: {} violation(s)", map.len());
            violation_lines(&map).iter().for_each(|l| println!("{l}"));
            println!("product consistency: {} violation(s)", consistency.len());
            violation_lines(&consistency).iter().for_each(|l| println!("{l}"));
        }
    }
    Ok(ok)
}

pub fn selftest(seed: u64, trials: Option<usize>, format: Format) -> Result<bool> {
    let mut config = SelfTestConfig { seed, ..SelfTestConfig::default() };
    if let Some(n) = trials {
        config.example_trials = n;
    }
    let report = run_selftest(&config)?;
    match format {
        Format::Json => print_json(&serde_json::to_value(&report)?),
        Format::Text => {
            for c in &report.checks {
                let verdict = if c.passed() { "ok" } else { "FAILED" };
                println!("{}: {}/{} {verdict}", c.name, c.cases - c.failures, c.cases);
                if let Some(f) = &c.first_failure {
                    println!("  first failure: {f}");
                }
            }
        }
    }
    Ok(report.passed())
}
