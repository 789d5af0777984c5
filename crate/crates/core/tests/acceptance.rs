//! Acceptance gate: one PASS/FAIL line per criterion, each under a fixed
//! time bound. Built without the test harness so the table always prints.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{col, m2, oracle_zeta8, random_m2, random_matrix};
use rand::Rng;
use tanglekit::algebra::{
    compose_invariants, connect_h_diagram, connect_h_inv, connect_v_diagram, connect_v_inv, fill_all,
    j_family_invariant, probe_equal,
};
use tanglekit::bracket::{
    recursive_zeta8, resolve, smooth_at, statesum_zeta8, BracketError, Smoothing, State, StateSumOptions,
};
use tanglekit::diagram::{crossing, fundamental, identity_spherical, parse_link, Fundamental};
use tanglekit::generate::{exhaustive_links, random_link, random_tangle, rng};
use tanglekit::spherical::{
    apply_op, enumerate_group, fuzz_det_square, mirror_diagram, rotate_hole_diagram, verify_coxeter, Boundary, ElemOp,
    OpWord, SignedPermAction, COSET_WORDS, RELATORS,
};
use tanglekit::{bracket_recursive, bracket_statesum, compute_invariant, IntMatrix, TangleDiagram};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn f(t: &TangleDiagram) -> Result<IntMatrix, String> {
    compute_invariant(t).map_err(|e| e.to_string())
}

struct Gate {
    results: Vec<(usize, bool)>,
}

impl Gate {
    fn run(&mut self, id: usize, name: &str, bound: Duration, check: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= bound => (true, d),
            Ok(d) => (false, format!("{d}; exceeded time bound")),
            Err(e) => (false, e),
        };
        println!(
            "{} criterion {id:>2} {name:<34} {:>9.3?} / {:<5?} {detail}",
            if ok { "PASS" } else { "FAIL" },
            took,
            bound
        );
        self.results.push((id, ok));
    }
}

fn c1_calibration() -> Outcome {
    let e = connect_v_diagram(&crossing(), &identity_spherical());
    let ft = connect_h_diagram(&fundamental(Fundamental::One), &e);
    let cases = [
        ("fundamental 1", fundamental(Fundamental::One), col(1, 0)),
        ("fundamental 2", fundamental(Fundamental::Two), col(0, 1)),
        ("crossing", crossing(), col(1, 1)),
        ("identity", identity_spherical(), m2(1, 0, 0, 1)),
        ("e", e, m2(1, 0, 1, 1)),
        ("f", ft, m2(1, 1, 0, 0)),
    ];
    for (name, t, want) in &cases {
        let got = f(t)?;
        ensure(got == *want, || format!("{name}: got {got}, want {want}"))?;
    }
    Ok(format!("{} goldens", cases.len()))
}

fn f5t5() -> IntMatrix {
    IntMatrix::from_rows(vec![
        vec![
            0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, -1, 0, -1, 0, 0, 1, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
        ],
        vec![
            0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, -1, 1, 0, 0, -1, 0, -1, 0, 0,
        ],
    ])
    .unwrap()
}

fn c2_j_tangle() -> Outcome {
    let parts = [col(-4, 1), col(-4, 1), col(2, 1), col(-4, 1), IntMatrix::identity(2)];
    let j = compose_invariants(&f5t5(), &parts).map_err(|e| e.to_string())?;
    let want = m2(-32, 16, -16, -10);
    ensure(j == want, || format!("composed {j}"))?;
    let det = j.det2().map_err(|e| e.to_string())?;
    ensure(det == 24 * 24, || format!("det {det}"))?;
    let closed = j_family_invariant([-4, -4, 2, -4], [1, 1, 1, 1]).map_err(|e| e.to_string())?;
    ensure(closed == want, || format!("closed form {closed}"))?;
    Ok(format!("{j} det {det}"))
}

fn c3_determinant_law() -> Outcome {
    let mut r = rng(3);
    for _ in 0..1000 {
        let p: [i64; 4] = std::array::from_fn(|_| r.gen_range(-9..=9));
        let q: [i64; 4] = std::array::from_fn(|_| r.gen_range(-9..=9));
        let det = j_family_invariant(p, q)
            .and_then(|m| Ok(m.det2()?))
            .map_err(|e| e.to_string())?;
        let root = p[0] * q[1] * q[2] * p[3] - q[0] * p[1] * p[2] * q[3];
        ensure(det == root * root, || format!("p={p:?} q={q:?}: det {det}"))?;
    }
    Ok("1000 tuples".into())
}

fn c4_composition() -> Outcome {
    let mut r = rng(4);
    let cases = 240;
    for i in 0..cases {
        let n = 1 + i % 2;
        let outer = random_tangle(&mut r, n, 6);
        let parts: Vec<TangleDiagram> = (0..n)
            .map(|_| {
                let k = r.gen_range(0..=1);
                random_tangle(&mut r, k, 4)
            })
            .collect();
        let glued = fill_all(&outer, &parts).map_err(|e| e.to_string())?;
        let fs = parts.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        let want = compose_invariants(&f(&outer)?, &fs).map_err(|e| e.to_string())?;
        let got = f(&glued)?;
        ensure(got == want, || {
            format!("case {i}: diagram {got}, formula {want}\n{outer}")
        })?;
    }
    Ok(format!("{cases} cases"))
}

fn swap_blocks(m: &IntMatrix, ka: usize, kb: usize) -> IntMatrix {
    let mut data = vec![0; 2 * ka * kb];
    for row in 0..2 {
        for i in 0..ka {
            for j in 0..kb {
                data[row * ka * kb + j * ka + i] = *m.get(row, i * kb + j);
            }
        }
    }
    IntMatrix::new(2, ka * kb, data).unwrap()
}

fn c5_connect_sums() -> Outcome {
    let mut r = rng(5);
    let cases = 240;
    for i in 0..cases {
        let (ka, kb) = (r.gen_range(0..=1), r.gen_range(0..=1));
        let a = random_tangle(&mut r, ka, 5);
        let b = random_tangle(&mut r, kb, 5);
        let (fa, fb) = (f(&a)?, f(&b)?);
        let sums = [
            (
                "h",
                connect_h_diagram(&a, &b),
                connect_h_diagram(&b, &a),
                connect_h_inv(&fa, &fb),
            ),
            (
                "v",
                connect_v_diagram(&a, &b),
                connect_v_diagram(&b, &a),
                connect_v_inv(&fa, &fb),
            ),
        ];
        for (name, ab, ba, formula) in sums {
            let got = f(&ab)?;
            let want = formula.map_err(|e| e.to_string())?;
            ensure(got == want, || {
                format!("case {i} +_{name}: diagram {got}, formula {want}")
            })?;
            let rev = f(&ba)?;
            ensure(swap_blocks(&rev, 1 << kb, 1 << ka) == got, || {
                format!("case {i} +_{name} not commutative")
            })?;
        }
    }
    Ok(format!("{cases} cases x 2 sums"))
}

fn c6_bracket_engines() -> Outcome {
    let small = exhaustive_links();
    let mut compared = 0;
    let check = |l: &tanglekit::LinkDiagram| -> Result<(), String> {
        let s = statesum_zeta8(l, StateSumOptions::default()).map_err(|e| e.to_string())?;
        let rc = recursive_zeta8(l).map_err(|e| e.to_string())?;
        ensure(s == rc && s == oracle_zeta8(l), || format!("engines disagree on\n{l}"))?;
        match (bracket_statesum(l), bracket_recursive(l)) {
            (Ok(a), Ok(b)) if a == b => Ok(()),
            (Err(BracketError::NotUnitMultiple(v)), _) | (_, Err(BracketError::NotUnitMultiple(v))) => {
                Err(format!("bracket {v} is not a unit multiple"))
            }
            other => Err(format!("{other:?}")),
        }
    };
    for l in small.iter().filter(|l| l.crossing_count() <= 6) {
        check(l)?;
        compared += 1;
    }
    let mut r = rng(6);
    for _ in 0..500 {
        check(&random_link(&mut r, 10))?;
        compared += 1;
    }
    let hopf = parse_link("link\nloops 0\nX a b c d\nX c d a b\n").unwrap();
    let h = bracket_statesum(&hopf).map_err(|e| e.to_string())?;
    ensure(h.magnitude() == 2, || format!("Hopf bracket {h}"))?;
    let mut skeins = 0;
    for _ in 0..100 {
        let l = random_link(&mut r, 8);
        let whole = recursive_zeta8(&l).map_err(|e| e.to_string())?;
        for i in 0..l.crossing_count() {
            let part = |s| statesum_zeta8(&smooth_at(&l, i, s), StateSumOptions::default()).map_err(|e| e.to_string());
            let (a, b) = (part(Smoothing::A)?, part(Smoothing::B)?);
            let rhs = a
                .mul_unit(1)
                .and_then(|a| a.checked_add(&b.mul_unit(-1)?))
                .map_err(|e| e.to_string())?;
            ensure(rhs == whole, || format!("skein fails at crossing {i} of\n{l}"))?;
            skeins += 1;
        }
    }
    Ok(format!("{compared} links, Hopf {h}, {skeins} skein checks"))
}

fn c7_parity() -> Outcome {
    let mut r = rng(7);
    for i in 0..1000 {
        let l = random_link(&mut r, 12);
        let c = l.crossing_count();
        let s = State::from_index(c, r.gen_range(0..1u64 << c));
        let t = State::from_index(c, r.gen_range(0..1u64 << c));
        let diff = s.0.iter().zip(&t.0).filter(|(a, b)| a != b).count() as u32;
        let (ds, dt) = (resolve(&l, &s), resolve(&l, &t));
        ensure(ds % 2 == (dt + diff) % 2, || {
            format!("sample {i}: {ds} vs {dt} with {diff} differences")
        })?;
    }
    Ok("1000 samples".into())
}

fn c8_probe_equality() -> Outcome {
    let mut classes = std::collections::BTreeSet::new();
    for k in 0..625i64 {
        let d = |i: u32| (k / 5i64.pow(i)) % 5 - 2;
        classes.insert(m2(d(0), d(1), d(2), d(3)).entries().to_vec());
    }
    let ms: Vec<IntMatrix> = classes.into_iter().map(|e| IntMatrix::new(2, 2, e).unwrap()).collect();
    for a in &ms {
        for b in &ms {
            let eq = probe_equal(a, b).map_err(|e| e.to_string())?;
            ensure(eq == (a == b), || format!("{a} vs {b}"))?;
        }
    }
    let mut r = rng(8);
    for cols in [4, 8] {
        for _ in 0..10_000 {
            let a = random_matrix(&mut r, 2, cols, 3);
            let b = random_matrix(&mut r, 2, cols, 3);
            let eq = probe_equal(&a, &b).map_err(|e| e.to_string())?;
            ensure(!eq || a == b, || format!("false equality {a} vs {b}"))?;
        }
    }
    Ok(format!("{} classes exhaustive, 2x10^4 random", ms.len()))
}

fn c9_coxeter() -> Outcome {
    let g = enumerate_group();
    ensure(g.len() == 16, || format!("|G(F)| = {}", g.len()))?;
    for rel in RELATORS {
        let act = rel.parse::<OpWord>().map_err(|e| e.to_string())?.action();
        ensure(act == SignedPermAction::IDENTITY, || {
            format!("relator {rel} acts as {act}")
        })?;
    }
    let report = verify_coxeter();
    ensure(report.presentation_order == Ok(16), || {
        format!("|C_M| = {:?}", report.presentation_order)
    })?;
    let distinct: std::collections::HashSet<_> = COSET_WORDS
        .iter()
        .map(|w| w.parse::<OpWord>().unwrap().action())
        .collect();
    ensure(distinct.len() == 8, || {
        format!("{} distinct coset words", distinct.len())
    })?;
    ensure(report.passed(), || report.to_string())?;
    Ok("|G(F)| = |C_M| = 16".into())
}

fn c10_elementary_ops() -> Outcome {
    let mut r = rng(10);
    for i in 0..100 {
        let s = random_tangle(&mut r, 1, 7);
        let fs = f(&s)?;
        let ops = [
            (ElemOp::Star, mirror_diagram(&s)),
            (
                ElemOp::R1,
                rotate_hole_diagram(&s, Boundary::Inner(0)).map_err(|e| e.to_string())?,
            ),
            (
                ElemOp::R2,
                rotate_hole_diagram(&s, Boundary::Outer).map_err(|e| e.to_string())?,
            ),
        ];
        for (op, d) in ops {
            let want = apply_op(op, &fs).map_err(|e| e.to_string())?;
            ensure(f(&d)? == want, || format!("diagram {i}: {} mismatch", op.name()))?;
        }
    }
    let op = |o: ElemOp, m: &IntMatrix| apply_op(o, m).unwrap();
    for i in 0..1000 {
        let (a, b) = (random_m2(&mut r, 9), random_m2(&mut r, 9));
        let ab = a.mul(&b).unwrap();
        let laws = [
            op(ElemOp::Star, &ab) == op(ElemOp::Star, &a).mul(&op(ElemOp::Star, &b)).unwrap(),
            op(ElemOp::Dash, &ab) == op(ElemOp::Dash, &b).mul(&op(ElemOp::Dash, &a)).unwrap(),
            op(ElemOp::R1, &ab) == a.mul(&op(ElemOp::R1, &b)).unwrap(),
            op(ElemOp::R2, &ab) == op(ElemOp::R2, &a).mul(&b).unwrap(),
            op(ElemOp::R, &ab) == op(ElemOp::R, &a).mul(&op(ElemOp::R, &b)).unwrap(),
        ];
        ensure(laws.iter().all(|&x| x), || format!("pair {i}: {a} {b} laws {laws:?}"))?;
        for o in ElemOp::ALL {
            ensure(op(o, &a).det2() == a.det2(), || {
                format!("{} changes det of {a}", o.name())
            })?;
        }
    }
    Ok("100 diagrams, 1000 pairs".into())
}

fn c11_open_problem() -> Outcome {
    let report = fuzz_det_square(500, 8, 11);
    let bad = report.counterexamples().count();
    println!("{report}");
    Ok(format!(
        "value [[5,-8],[8,-11]] not reproduced (its diagram is only drawn); fuzz report only: {}/{} squares, {} non-square, {} failed",
        report.squares(),
        report.samples.len(),
        bad,
        report.failures.len()
    ))
}

fn main() {
    let mut gate = Gate { results: Vec::new() };
    let s = Duration::from_secs;
    gate.run(1, "calibration goldens", s(1), c1_calibration);
    gate.run(2, "J tangle composition", s(1), c2_j_tangle);
    gate.run(3, "J-family determinant law", s(1), c3_determinant_law);
    gate.run(4, "composition differential", s(60), c4_composition);
    gate.run(5, "connect-sum differential", s(60), c5_connect_sums);
    gate.run(6, "bracket engine equivalence", s(60), c6_bracket_engines);
    gate.run(7, "state parity", s(5), c7_parity);
    gate.run(8, "probe-set equality", s(30), c8_probe_equality);
    gate.run(9, "Coxeter verification", s(1), c9_coxeter);
    gate.run(10, "elementary-op laws", s(30), c10_elementary_ops);
    gate.run(11, "determinant squares (report only)", s(60), c11_open_problem);
    let failed: Vec<usize> = gate.results.iter().filter(|(_, ok)| !ok).map(|(id, _)| *id).collect();
    println!(
        "{}/{} criteria passed",
        gate.results.len() - failed.len(),
        gate.results.len()
    );
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
