//! Acceptance criteria 1–9, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines always reach stdout:
//! `cargo test -p bicyclic-cli --test acceptance`.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, ExitCode};

use bicyclic_core::harness::{cross_validate, parse_spec_unvalidated};
use bicyclic_core::{
    decide_left_iorder, decide_right_iorder, decompose, hat_spec, multiply_via_rewriting,
    verify_witness, Closure, Element, Subsemigroup,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

/// Certificate element and reason expected for a negative decision.
type Expected = Option<((u64, u64), &'static str)>;

type Criterion = (&'static str, fn() -> Outcome);

const SEED: u64 = 0x5eed_b1c7;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn load(name: &str) -> Result<Subsemigroup, String> {
    let path = corpus_dir().join(format!("{name}.spec"));
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let spec = parse_spec_unvalidated(&text).map_err(|e| format!("{name}: {e}"))?;
    Subsemigroup::new(spec).map_err(|e| format!("{name}: {e}"))
}

fn window(w: u64) -> impl Iterator<Item = Element> {
    (0..=w).flat_map(move |i| (0..=w).map(move |j| Element::new(i, j)))
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Expected left decision per valid corpus file: `None` for yes, otherwise
/// the certificate element and reason.
const VALID: &[(&str, Expected)] = &[
    ("b_plus", None),
    ("r1", None),
    ("lower_t_m2", None),
    ("lower_b_plus_hat", None),
    ("twosided_i_r1", None),
    ("twosided_ii_p2", None),
    ("diagonal_e0_e1", Some(((0, 1), "idempotents-only"))),
    ("diagonal_finite", Some(((0, 1), "idempotents-only"))),
    ("diagonal_tail", Some(((0, 1), "idempotents-only"))),
    ("upper_d2", Some(((0, 1), "parity"))),
    ("upper_row0_gap", Some(((0, 1), "row0-gap"))),
    ("lower_column0", Some(((1, 1), "empty-L-class"))),
    ("lower_rows_0_2", Some(((1, 1), "empty-L-class"))),
    ("lower_no_column0", Some(((1, 0), "column0-gap"))),
    ("twosided_i_d3", Some(((0, 1), "parity"))),
    ("twosided_ii_d3", Some(((0, 1), "parity"))),
    ("twosided_ii_q1", Some(((0, 1), "row0-gap"))),
];

/// Invalid corpus files and a fragment of the violation each must report.
const INVALID: &[(&str, &str)] = &[
    ("invalid_q_not_in_I", "q ∈ I fails"),
    ("invalid_zero_not_in_P", "0 ∈ P fails"),
    ("invalid_twosided_union", "I ⊆ {q,…,p−1} fails: 7"),
    ("invalid_row_element", "∉ Λ_{0,0,2}"),
    ("invalid_diagonal", "not on the diagonal"),
];

/// Products of all pairs with coordinates up to 15 agree with rewriting.
fn criterion_1() -> Outcome {
    let elems: Vec<Element> = window(15).collect();
    let mut pairs = 0u64;
    for &x in &elems {
        for &y in &elems {
            let fast = x * y;
            let slow = multiply_via_rewriting(x, y);
            check(fast == slow, || format!("{x}{y}: {fast} vs {slow}"))?;
            pairs += 1;
        }
    }
    check(pairs == 65_536, || format!("checked {pairs} pairs"))
}

/// Associativity and inverse laws on seeded random elements up to 20.
fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut pick = || Element::new(rng.gen_range(0..=20), rng.gen_range(0..=20));
    for _ in 0..10_000 {
        let (x, y, z) = (pick(), pick(), pick());
        check((x * y) * z == x * (y * z), || {
            format!("associativity at {x} {y} {z}")
        })?;
        let inv = x.inverse();
        check(x * inv * x == x && inv * x * inv == inv, || {
            format!("inverse laws at {x}")
        })?;
        check(
            (x * inv).is_idempotent() && (inv * x).is_idempotent(),
            || format!("x x⁻¹ or x⁻¹ x not idempotent at {x}"),
        )?;
    }
    Ok(())
}

/// Green's relations on all pairs in the 12×12 window.
fn criterion_3() -> Outcome {
    let elems: Vec<Element> = window(12).collect();
    for &x in &elems {
        for &y in &elems {
            let g = x.green(y);
            check(g.l == (x.j == y.j), || format!("L at {x} {y}"))?;
            check(g.r == (x.i == y.i), || format!("R at {x} {y}"))?;
            check(g.h == (x == y), || format!("H at {x} {y}"))?;
            check(g.d, || format!("D at {x} {y}"))?;
        }
    }
    let e = |n| Element::idempotent(n);
    for m in 0..=12 {
        for n in 0..=12 {
            let leq = e(m).idempotent_leq(e(n)).map_err(|err| err.to_string())?;
            check(leq == (m >= n), || format!("e_{m} <= e_{n}"))?;
        }
    }
    check(Element::new(1, 2).idempotent_leq(e(0)).is_err(), || {
        "non-idempotent accepted by the order".into()
    })
}

/// The corpus validates exactly as expected.
fn criterion_4() -> Outcome {
    for (name, _) in VALID {
        load(name)?;
    }
    for (name, needle) in INVALID {
        match load(name) {
            Ok(_) => return Err(format!("{name} validated")),
            Err(msg) => check(msg.contains(needle), || format!("{name}: {msg}"))?,
        }
    }
    Ok(())
}

/// Positive decisions decompose every window element straightly.
fn criterion_5() -> Outcome {
    for (name, _) in VALID.iter().filter(|(_, e)| e.is_none()) {
        let s = load(name)?;
        check(decide_left_iorder(&s).is_yes(), || {
            format!("{name}: decided no")
        })?;
        for q in window(12) {
            let w = decompose(&s, q).map_err(|e| format!("{name} {q}: {e}"))?;
            check(w.x.i == w.y.i && verify_witness(&s, &w), || {
                format!("{name}: bad witness {w}")
            })?;
        }
    }
    Ok(())
}

/// Negative certificates match and are absent from coverage at W = 10.
fn criterion_6() -> Outcome {
    for (name, expected) in VALID {
        let Some(((i, j), reason)) = expected else {
            continue;
        };
        let s = load(name)?;
        let d = decide_left_iorder(&s);
        let u = d
            .uncovered()
            .ok_or_else(|| format!("{name}: no certificate"))?;
        check(
            u.element == Element::new(*i, *j) && u.reason.as_str() == *reason,
            || format!("{name}: got {} {}", u.element, u.reason.as_str()),
        )?;
        let c = cross_validate(&s, 10);
        check(c.coverage.gaps.contains(&u.element), || {
            format!("{name}: {} was covered", u.element)
        })?;
    }
    Ok(())
}

/// Duality: right decisions are left decisions of the hat, hat is an
/// involution, and enumeration commutes with hat.
fn criterion_7() -> Outcome {
    let r1 = load("r1")?;
    let bp = load("b_plus")?;
    check(!decide_right_iorder(&r1).is_yes(), || {
        "R_1 is a right I-order".into()
    })?;
    check(decide_right_iorder(&bp).is_yes(), || {
        "B+ is not a right I-order".into()
    })?;
    for (name, _) in VALID {
        let s = load(name)?;
        let h = hat_spec(&s);
        check(hat_spec(&h) == s, || {
            format!("{name}: hat is not an involution")
        })?;
        check(
            decide_right_iorder(&s).is_yes() == decide_left_iorder(&h).is_yes(),
            || format!("{name}: right decision differs from left decision of hat"),
        )?;
        let mirrored: BTreeSet<Element> = s.enumerate_window(12).iter().map(|x| x.hat()).collect();
        check(h.enumerate_window(12) == mirrored, || {
            format!("{name}: hat/enumerate")
        })?;
    }
    Ok(())
}

/// Cross-validation passes and closure holds for every valid corpus file.
fn criterion_8() -> Outcome {
    for (name, _) in VALID {
        let s = load(name)?;
        let c = cross_validate(&s, 10);
        check(c.passed(), || format!("{name}: cross-validation failed"))?;
        check(s.closure_falsify(12) == Closure::NoCounterexample, || {
            format!("{name}: closure counterexample")
        })?;
    }
    Ok(())
}

fn bicyclic(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_bicyclic"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let code = out.status.code().ok_or("terminated by signal")?;
    Ok((code, String::from_utf8_lossy(&out.stdout).into_owned()))
}

fn spec_arg(name: &str) -> String {
    corpus_dir()
        .join(format!("{name}.spec"))
        .display()
        .to_string()
}

/// CLI renders byte-exact grids and uses exit statuses 0, 1 and 2.
fn criterion_9() -> Outcome {
    let grids = [
        ("r1", "2", "# # #\n. . .\n. . .\n"),
        ("diagonal_e0_e1", "1", "# .\n. #\n"),
        ("b_plus", "2", "# # #\n. # #\n. . #\n"),
    ];
    for (name, w, expected) in grids {
        let (code, out) = bicyclic(&["render", &spec_arg(name), "--window", w])?;
        check(code == 0 && out == expected, || {
            format!("render {name}: {code} {out:?}")
        })?;
    }
    let statuses: [(Vec<String>, i32); 4] = [
        (vec!["decide".into(), spec_arg("b_plus")], 0),
        (vec!["decide".into(), spec_arg("lower_column0")], 1),
        (vec!["decide".into(), spec_arg("invalid_q_not_in_I")], 2),
        (vec!["decide".into(), spec_arg("no_such_file")], 2),
    ];
    for (args, expected) in statuses {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, _) = bicyclic(&args)?;
        check(code == expected, || {
            format!("{args:?}: exit {code}, expected {expected}")
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "multiplication agrees with rewriting on 65,536 pairs",
            criterion_1,
        ),
        (
            "associativity and inverse laws on 10,000 seeded triples",
            criterion_2,
        ),
        (
            "Green's relations and idempotent order on the 12x12 window",
            criterion_3,
        ),
        ("corpus validation outcomes", criterion_4),
        ("straight witnesses for positive decisions", criterion_5),
        ("negative certificates are uncovered at W = 10", criterion_6),
        ("left/right duality", criterion_7),
        ("cross-validation and closure over the corpus", criterion_8),
        ("CLI rendering and exit statuses", criterion_9),
    ];
    let mut failures = 0;
    for (n, (title, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("criterion {}: PASS  {title}", n + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {title}: {why}", n + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
