//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs the library directly and the `sgstar` binary for the
//! end-to-end checks.

use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode, Stdio};

use serde_json::Value;
use sgstar::bounds;
use sgstar::constructions::{self, random_corpus, XorShift64Star};
use sgstar::linalg::{char_poly, squarefree_decomposition};
use sgstar::spectra;
use sgstar::srg;
use sgstar::starcomp::{self, CliqueLimits};
use sgstar::{ExactScalar, SignedGraph};

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

const CORPUS_SEED: u64 = 2024;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sgstar(args: &[&str], stdin: Option<&str>) -> Result<(i32, Vec<u8>), String> {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sgstar"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| format!("cannot run sgstar: {e}"))?;
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).map_err(|e| e.to_string())?;
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn sgstar_text(args: &[&str], stdin: Option<&str>) -> Result<String, String> {
    let (code, out) = sgstar(args, stdin)?;
    ensure(code == 0, || format!("sgstar {args:?} exited {code}"))?;
    String::from_utf8(out).map_err(|e| e.to_string())
}

fn sgstar_json(args: &[&str], stdin: Option<&str>) -> Result<Value, String> {
    let text = sgstar_text(args, stdin)?;
    serde_json::from_str(&text).map_err(|e| format!("sgstar {args:?}: {e}"))
}

fn cubic_of(report: &Value) -> Result<&Value, String> {
    report["results"]["bounds"]
        .as_array()
        .and_then(|b| b.iter().find(|r| r["bound"] == "cubic"))
        .ok_or_else(|| "no cubic bound in report".to_string())
}

fn sqrt2() -> ExactScalar {
    ExactScalar::sqrt(2)
}

/// Every exact eigenvalue outside {0, 1, -1} on the seeded corpus.
fn instances() -> Vec<(SignedGraph, ExactScalar)> {
    let mut out = Vec::new();
    for g in random_corpus(200, 9, CORPUS_SEED) {
        let report = spectra::spectrum(&g).expect("spectrum of a small graph");
        for (mu, _) in report.exact_eigenvalues() {
            if !mu.is_trivial_unit() {
                out.push((g.clone(), mu.clone()));
            }
        }
    }
    out
}

fn e8_through_cli() -> Check {
    let text = sgstar_text(&["construct", "e8"], None)?;
    let g = SignedGraph::parse(&text).map_err(|e| e.to_string())?;
    ensure(g.order() == 120, || format!("order {}", g.order()))?;
    let spectrum = sgstar_json(&["spectrum", "-"], Some(&text))?;
    let values = spectrum["results"]["eigenvalues"].as_array().ok_or("no eigenvalues")?;
    let pairs: Vec<(String, u64)> = values
        .iter()
        .map(|d| (d["value"].as_str().unwrap_or("?").to_string(), d["multiplicity"].as_u64().unwrap_or(0)))
        .collect();
    ensure(pairs == [("28".to_string(), 8), ("-2".to_string(), 112)], || format!("spectrum {pairs:?}"))?;
    let report = sgstar_json(&["bounds", "-", "--mu", "-2"], Some(&text))?;
    let cubic = cubic_of(&report)?;
    ensure(cubic["t"] == 8 && cubic["bound_value"] == "120" && cubic["attained"] == true, || format!("cubic {cubic}"))
}

fn quadrangles_attain() -> Check {
    for neg in [1, 3] {
        let g = constructions::quadrangle(neg).map_err(|e| e.to_string())?;
        for mu in [sqrt2(), -sqrt2()] {
            let k = spectra::multiplicity(&g, &mu);
            ensure(k == 2, || format!("quadrangle({neg}): multiplicity of {mu} is {k}"))?;
            let r = bounds::cubic_bound_check(&g, &mu).map_err(|e| e.to_string())?;
            ensure(r.t == 2 && r.attained, || format!("quadrangle({neg}), {mu}: {r:?}"))?;
        }
    }
    let text = sgstar_text(&["construct", "quadrangle", "--neg", "1"], None)?;
    let report = sgstar_json(&["bounds", "-", "--mu", "sqrt(2)"], Some(&text))?;
    ensure(cubic_of(&report)?["attained"] == true, || "CLI cubic not attained".into())
}

fn reconstruction(instances: &[(SignedGraph, ExactScalar)]) -> Check {
    ensure(instances.len() > 100, || format!("only {} instances", instances.len()))?;
    for (g, mu) in instances {
        let p = starcomp::find_star_set(g, mu).map_err(|e| e.to_string())?;
        ensure(p.k() == spectra::multiplicity(g, mu), || format!("star set size for {mu}"))?;
        starcomp::verify_star_set(g, mu, p.star_set()).map_err(|e| format!("{mu} on\n{}: {e}", g.to_text()))?;
    }
    Ok(())
}

fn table_and_restriction(instances: &[(SignedGraph, ExactScalar)]) -> Check {
    for (g, mu) in instances {
        let p = starcomp::find_star_set(g, mu).map_err(|e| e.to_string())?;
        if let Some((u, v)) = bounds::inner_product_table_check(&p) {
            return Err(format!("table fails at ({u}, {v}) for {mu} on\n{}", g.to_text()));
        }
        let basis = bounds::orthogonal_complement_basis(g, mu).map_err(|e| e.to_string())?;
        ensure(basis.len() == p.t(), || format!("basis size {} != t {}", basis.len(), p.t()))?;
        for w in &basis {
            let ok = bounds::complement_restriction_check(&p, w).map_err(|e| e.to_string())?;
            ensure(ok, || format!("restriction fails for {mu} on\n{}", g.to_text()))?;
        }
    }
    Ok(())
}

fn cubic_certificates(instances: &[(SignedGraph, ExactScalar)]) -> Check {
    for (g, mu) in instances {
        let c = bounds::cubic_rank_certificate(g, mu).map_err(|e| e.to_string())?;
        ensure(c.independent, || format!("dependent for {mu} on\n{}", g.to_text()))?;
    }
    let q = constructions::quadrangle(1).map_err(|e| e.to_string())?;
    let e8 = constructions::e8_signed_graph().map_err(|e| e.to_string())?;
    for (g, mu) in [(&q, sqrt2()), (&q, -sqrt2()), (&e8, ExactScalar::from_int(-2))] {
        let c = bounds::cubic_rank_certificate(g, &mu).map_err(|e| e.to_string())?;
        ensure(c.independent && c.rank == c.n && c.n == c.dim_h3, || format!("{mu}: {c:?}"))?;
        ensure(c.determinant.as_ref().is_some_and(|d| !d.is_zero()), || format!("{mu}: zero determinant"))?;
    }
    Ok(())
}

fn bounds_hold(instances: &[(SignedGraph, ExactScalar)]) -> Check {
    for (g, mu) in instances {
        for r in bounds::all_bounds(g, mu).map_err(|e| e.to_string())? {
            ensure(!r.violated(), || format!("{} violated for {mu} on\n{}", r.kind, g.to_text()))?;
        }
        let nonmain = bounds::nonmain_bound_check(g, mu).map_err(|e| e.to_string())?;
        let main = spectra::is_main(g, mu).map_err(|e| e.to_string())?;
        let expected = spectra::multiplicity(g, mu) + 1 < g.order() && !main;
        ensure(nonmain.applicable == expected, || format!("non-main applicability for {mu} on\n{}", g.to_text()))?;
    }
    let e8 = constructions::e8_signed_graph().map_err(|e| e.to_string())?;
    let main = spectra::is_main(&e8, &ExactScalar::from_int(-2)).map_err(|e| e.to_string())?;
    ensure(main, || "-2 should be main on the E8 graph".into())
}

fn extension_round_trip() -> Check {
    let q = constructions::quadrangle(1).map_err(|e| e.to_string())?;
    let mu = sqrt2();
    let p = starcomp::find_star_set(&q, &mu).map_err(|e| e.to_string())?;
    let c = p.complement_graph();
    ensure(c.order() == 2, || format!("complement order {}", c.order()))?;
    let catalog = starcomp::max_extensions(&c, &mu, CliqueLimits::default()).map_err(|e| e.to_string())?;
    let mut found = false;
    for i in 0..catalog.cliques.len() {
        let ext = starcomp::realize_extension(&c, &mu, &catalog.clique_vectors(i)).map_err(|e| e.to_string())?;
        starcomp::verify_star_set(ext.graph(), &mu, ext.star_set()).map_err(|e| e.to_string())?;
        let k = spectra::multiplicity(ext.graph(), &mu);
        ensure(k == ext.k(), || format!("clique {i}: multiplicity {k} != {}", ext.k()))?;
        if catalog.cliques[i].len() == 2 {
            let report = spectra::spectrum(ext.graph()).map_err(|e| e.to_string())?;
            let spectrum: Vec<(String, usize)> = report.exact_eigenvalues().map(|(m, k)| (m.to_string(), k)).collect();
            found |= spectrum == [("sqrt(2)".to_string(), 2), ("-sqrt(2)".to_string(), 2)];
        }
    }
    ensure(found, || "no size-2 clique realizes the quadrangle spectrum".into())
}

fn srg_checks() -> Check {
    let q = constructions::quadrangle(1).map_err(|e| e.to_string())?;
    let p = srg::srg_check(&q).map_err(|r| r.to_string())?;
    let holds = srg::mean_parameter_check(&p).map_err(|e| e.to_string())?;
    ensure(holds, || format!("mean parameter check fails: {p:?}"))?;
    let (a, b, c) = (p.a.unwrap_or(0), p.b.unwrap_or(0), p.c.unwrap_or(0));
    ensure(p.a.is_some() && p.b.is_some() && p.c.is_some() && 2 * c == a + b, || format!("{p:?}"))?;
    for g in random_corpus(200, 9, CORPUS_SEED) {
        let a = g.adjacency();
        let n = g.order();
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                let square: i64 = (0..n).map(|u| a[i][u] * a[u][j]).sum();
                let sum = srg::signed_common_sum(&g, i, j).map_err(|e| e.to_string())?;
                ensure(sum == square, || format!("({i}, {j}): {sum} != {square} on\n{}", g.to_text()))?;
            }
        }
    }
    Ok(())
}

fn multiplicity_agreement() -> Check {
    let graphs = random_corpus(200, 9, CORPUS_SEED).into_iter().chain(random_corpus(60, 12, CORPUS_SEED + 1));
    for g in graphs {
        let poly = char_poly(&g.adjacency()).map_err(|e| e.to_string())?;
        let decomposition = squarefree_decomposition(&poly).map_err(|e| e.to_string())?;
        let report = spectra::spectrum(&g).map_err(|e| e.to_string())?;
        for (mu, m) in report.exact_eigenvalues() {
            let r = decomposition.root_multiplicity(mu) as usize;
            ensure(r == m, || format!("{mu}: rank gives {m}, polynomial gives {r} on\n{}", g.to_text()))?;
        }
    }
    Ok(())
}

/// xorshift64* straight from its definition, for the reproducibility check.
fn reference_xorshift(seed: u64, count: usize) -> Vec<u64> {
    let mut x = seed;
    (0..count)
        .map(|_| {
            x ^= x >> 12;
            x ^= x << 25;
            x ^= x >> 27;
            x.wrapping_mul(0x2545_F491_4F6C_DD1D)
        })
        .collect()
}

fn determinism() -> Check {
    let q = sgstar_text(&["construct", "quadrangle", "--neg", "3"], None)?;
    for args in [
        vec!["spectrum", "-"],
        vec!["bounds", "-", "--mu", "-sqrt(2)"],
        vec!["star-set", "-", "--mu", "sqrt(2)"],
        vec!["srg", "-"],
        vec!["certify", "-", "--mu", "sqrt(2)"],
    ] {
        let first = sgstar(&args, Some(&q))?;
        let second = sgstar(&args, Some(&q))?;
        ensure(first == second, || format!("sgstar {args:?} is not reproducible"))?;
    }
    let mut rng = XorShift64Star::new(1);
    let drawn: Vec<u64> = (0..3).map(|_| rng.next_u64()).collect();
    ensure(drawn == reference_xorshift(1, 3), || format!("generator drifted: {drawn:x?}"))?;
    ensure(drawn[0] == 0x47E4_CE4B_896C_DD1D, || format!("first draw {:#x}", drawn[0]))?;
    let a = constructions::random_signed_graph(10, 0.5, 0.5, 7);
    let b = constructions::random_signed_graph(10, 0.5, 0.5, 7);
    ensure(a == b, || "random_signed_graph is not reproducible".into())?;
    ensure(random_corpus(50, 9, 3) == random_corpus(50, 9, 3), || "random_corpus is not reproducible".into())
}

fn main() -> ExitCode {
    let instances = instances();
    let criteria: Vec<Criterion> = vec![
        ("E8 graph: order, spectrum and attained cubic bound through the CLI", Box::new(e8_through_cli)),
        ("quadrangles: multiplicities and attained cubic bound", Box::new(quadrangles_attain)),
        ("star sets reconstruct the graph on the corpus", Box::new(|| reconstruction(&instances))),
        ("inner-product table and complement restriction", Box::new(|| table_and_restriction(&instances))),
        ("cubic rank certificates", Box::new(|| cubic_certificates(&instances))),
        ("multiplicity bounds hold; non-main applicability", Box::new(|| bounds_hold(&instances))),
        ("extension round trip from a star complement", Box::new(extension_round_trip)),
        ("strong regularity parameters and signed common sums", Box::new(srg_checks)),
        ("rank multiplicity equals polynomial root multiplicity", Box::new(multiplicity_agreement)),
        ("deterministic output and seeded generators", Box::new(determinism)),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(e) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {e}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
