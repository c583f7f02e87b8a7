//! Acceptance suite: one line per criterion, exit status 1 if any fails.

mod oracles;

use std::process::{Command, ExitCode};
use std::time::Instant;

use num_traits::One;
use partid::combinat::{factorial, stirling_row, stirling_unsigned};
use partid::identities::*;
use partid::partitions::enumerate;
use partid::polyalg::{binom_poly, theorem9_lhs, theorem9_rhs, Canonical, UniPoly};
use partid::sweep::{run, Identity, Registry, EXIT_COUNTEREXAMPLE, EXIT_IO, EXIT_PASS, EXIT_USAGE};
use partid::{Integer, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0;
    for n in 0..=12 {
        for mu in enumerate(n) {
            for r in 1..=n {
                let fast = gen_binom(&mu, r);
                let slow = gen_binom_oracle(&mu, r, DEFAULT_ORACLE_CAP).map_err(|e| e.to_string())?;
                let independent = Integer::from(oracles::covering_subsets(mu.parts(), r));
                ensure(fast == slow && fast == independent, || {
                    format!("<{mu},{r}>: {fast} vs oracle {slow} vs subsets {independent}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} pairs (λ, r)"))
}

fn theorem_rising_polynomial() -> Outcome {
    let mut checked = 0;
    for n in 1..=8 {
        for r in 1..=n {
            for s in 1..=8 {
                for (form, sides) in [("signed", thm1_sides(n, r, s)), ("unsigned", thm1_alt_sides(n, r, s))] {
                    let sides = sides.map_err(|e| e.to_string())?;
                    let c = sides.canonical();
                    ensure(c.lhs == c.rhs, || format!("{form} n={n} r={r} s={s}: {} vs {}", c.lhs, c.rhs))?;
                    ensure(sides.lhs.degree().is_none_or(|d| d < r), || format!("degree n={n} r={r} s={s}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} polynomial identities"))
}

fn theorem_fixed_length_and_stirling() -> Outcome {
    let mut checked = 0;
    for n in 1..=10 {
        for r in 1..=n {
            for p in 1..=r {
                for s in 1..=6 {
                    let t = thm2_sides(n, r, s, p).map_err(|e| e.to_string())?;
                    ensure(t.holds(), || format!("n={n} r={r} s={s} p={p}: {} vs {}", t.lhs, t.rhs))?;
                    checked += 1;
                    // X^{p-1} coefficient of the polynomial identity, times r!/s!
                    if n <= 8 && s <= 3 {
                        let poly = thm1_sides(n, r, s).map_err(|e| e.to_string())?;
                        let k = sign(r as i64 - p as i64) * Rational::new(factorial(r), factorial(s));
                        ensure(poly.lhs.coeff(p - 1) * k.clone() == t.lhs, || format!("coefficient n={n} r={r} s={s} p={p}"))?;
                        ensure(poly.rhs.coeff(p - 1) * k == t.rhs, || format!("coefficient n={n} r={r} s={s} p={p}"))?;
                    }
                }
                let e = eq3_sides(n, r, p).map_err(|e| e.to_string())?;
                ensure(e.holds(), || format!("s=1 n={n} r={r} p={p}: {} vs {}", e.lhs, e.rhs))?;
                let t1 = thm2_sides(n, r, 1, p).map_err(|e| e.to_string())?;
                ensure(t1.lhs == e.lhs * rat(n as i64), || format!("s=1 scaling n={n} r={r} p={p}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} scalar identities"))
}

fn theorems_length_r_and_unweighted() -> Outcome {
    let mut checked = 0;
    for n in 1..=10 {
        for s in 1..=8 {
            for r in 1..=n {
                let t = thm3_sides(n, r, s).map_err(|e| e.to_string())?;
                ensure(t.holds(), || format!("length-r n={n} r={r} s={s}: {} vs {}", t.lhs, t.rhs))?;
                checked += 1;
            }
            for sides in [thm4_sides(n, s), thm4_alt_sides(n, s)] {
                let c = sides.map_err(|e| e.to_string())?.canonical();
                ensure(c.lhs == c.rhs, || format!("unweighted n={n} s={s}: {} vs {}", c.lhs, c.rhs))?;
                checked += 1;
            }
        }
        // s = 1, multiplied by X/n, is the classical expansion of C(X, n)
        let t = thm4_sides(n, 1).map_err(|e| e.to_string())?;
        let scale = Rational::new(1.into(), (n as i64).into());
        let classical = classical_sides(n).map_err(|e| e.to_string())?;
        ensure(t.lhs.mul_x().scale(&scale) == classical.lhs, || format!("classical lhs n={n}"))?;
        ensure(t.rhs.mul_x().scale(&scale) == binom_poly(n), || format!("classical rhs n={n}"))?;
        let direct: UniPoly = enumerate(n)
            .iter()
            .map(|mu| UniPoly::monomial(mu.len(), sign((n - mu.len()) as i64) * Rational::new(1.into(), mu.zeta())))
            .sum();
        ensure(direct.canonical() == binom_poly(n).canonical(), || format!("classical identity n={n}"))?;
        checked += 1;
    }
    Ok(format!("{checked} identities"))
}

fn z_marked_theorems() -> Outcome {
    let mut checked = 0;
    for n in 1..=8 {
        let t = thm5_sides(n).map_err(|e| e.to_string())?.canonical();
        ensure(t.lhs == t.rhs, || format!("unweighted z-marked n={n}"))?;
        checked += 1;
        for r in 1..=n {
            let t7 = thm7_sides(n, r).map_err(|e| e.to_string())?.canonical();
            ensure(t7.lhs == t7.rhs, || format!("z-marked n={n} r={r}: {} vs {}", t7.lhs, t7.rhs))?;
            checked += 1;
            for p in 1..=r {
                let t8 = thm8_sides(n, r, p).map_err(|e| e.to_string())?.canonical();
                ensure(t8.lhs == t8.rhs, || format!("z-coefficient n={n} r={r} p={p}: {} vs {}", t8.lhs, t8.rhs))?;
                checked += 1;
            }
        }
    }
    for n in 1..=6 {
        for r in 1..=n {
            for s in 1..=4 {
                let at_ones = thm7_at_ones(n, r, s).map_err(|e| e.to_string())?;
                let direct = thm1_sides(n, r, s).map_err(|e| e.to_string())?;
                ensure(at_ones.canonical() == direct.canonical(), || format!("z -> 1^(s+1) n={n} r={r} s={s}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} identities"))
}

fn exponential_series() -> Outcome {
    let lhs = theorem9_lhs(10, 10).canonical();
    let rhs = theorem9_rhs(10, 10).canonical();
    ensure(lhs == rhs, || format!("caps 10:\n{lhs}\n{rhs}"))?;
    let route = oracles::theorem9_binomial_route(6);
    for series in [theorem9_lhs(6, 6), theorem9_rhs(6, 6)] {
        let body = series.body();
        ensure(body.len() == route.len(), || format!("{} terms vs {} from the binomial route", body.len(), route.len()))?;
        for (&(a, b, c), v) in &route {
            let got = series.coeff(&[("x", a), ("y", b), ("q", c)]);
            ensure(&got == v, || format!("x^{a} y^{b} q^{c}: {got} vs {v}"))?;
        }
    }
    Ok(format!("caps 10 equal; {} coefficients at caps 6 match the binomial route", route.len()))
}

fn lemma() -> Outcome {
    let mut checked = 0;
    for a in 0..=6i64 {
        for b in 1..=6i64 {
            for c in 0..=a {
                for d in c..=a {
                    let s = lemma_sides(a, b, c, d);
                    ensure(s.holds(), || format!("a={a} b={b} c={c} d={d}: {} vs {}", s.lhs, s.rhs))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} tuples"))
}

fn recurrence_and_length_relations() -> Outcome {
    let mut checked = 0;
    for n in 0..=10 {
        for lambda in enumerate(n) {
            for i in 1..=6 {
                for r in 0..=n + i + 1 {
                    let s = recurrence_sides(&lambda, i, r);
                    ensure(s.holds(), || format!("{lambda} i={i} r={r}: {} vs {}", s.lhs, s.rhs))?;
                    checked += 1;
                }
            }
        }
    }
    for n in 1..=12 {
        for mu in enumerate(n) {
            for offset in [0, 1] {
                let s = length_relation_sides(&mu, offset).map_err(|e| e.to_string())?;
                ensure(s.holds(), || format!("{mu} offset {offset}: {} vs {}", s.lhs, s.rhs))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} instances"))
}

fn conjectures() -> Outcome {
    let mut checked = 0;
    for n in 1..=6 {
        for r in 1..=n {
            let sides = conj2_sides(n, r, 6).map_err(|e| e.to_string())?.canonical();
            ensure(sides.lhs == sides.rhs, || format!("counterexample n={n} r={r}:\n{}\n{}", sides.lhs, sides.rhs))?;
            checked += 1;
        }
        let sides = conj1_sides(n, 6).map_err(|e| e.to_string())?.canonical();
        ensure(sides.lhs == sides.rhs, || format!("counterexample r=n={n}"))?;
        checked += 1;
    }
    Ok(format!("{checked} series truncated at u^6"))
}

fn combinatorial_sanity() -> Outcome {
    for n in 0..=14 {
        let row_sum: Integer = (0..=n as i64).map(|k| stirling_unsigned(n, k)).sum();
        ensure(row_sum == factorial(n), || format!("Stirling row {n} sums to {row_sum}"))?;
        let expected: Vec<Integer> = oracles::falling_coeffs(n).into_iter().map(Integer::from).collect();
        ensure(stirling_row(n) == expected, || format!("Stirling row {n}"))?;
    }
    ensure(enumerate(8).len() == 22, || format!("p(8) = {}", enumerate(8).len()))?;
    for n in 0..=30 {
        ensure(enumerate(n).len() as u64 == oracles::partition_count(n), || format!("p({n})"))?;
    }
    for n in 1..=7 {
        let counts = oracles::cycle_type_counts(n);
        ensure(counts.len() == enumerate(n).len(), || format!("cycle types of S_{n}"))?;
        for mu in enumerate(n) {
            let class = Integer::from(oracles::factorial(n)) / mu.zeta();
            ensure(Integer::from(counts[mu.parts()]) == class, || format!("class size of {mu}"))?;
        }
    }
    for n in 1..=10 {
        let total: Rational = enumerate(n).iter().map(|mu| Rational::new(1.into(), mu.zeta())).sum();
        ensure(total.is_one(), || format!("Σ 1/z_μ = {total} for n={n}"))?;
    }
    for n in 0..=8 {
        let s = chu_vandermonde_sides(n).canonical();
        ensure(s.lhs == s.rhs, || format!("Chu–Vandermonde n={n}"))?;
        let h = h_convolution_sides(n).canonical();
        ensure(h.lhs == h.rhs, || format!("h convolution n={n}"))?;
    }
    for i in 1..=10 {
        for k in 1..=10 {
            ensure(h_relation_sides(i, k).map_err(|e| e.to_string())?.holds(), || format!("h relation i={i} k={k}"))?;
        }
    }
    Ok("Stirling n ≤ 14, p(n) n ≤ 30, cycle types n ≤ 7, Chu–Vandermonde n ≤ 8".into())
}

fn cli_determinism_and_exit_codes() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let bin = env!("CARGO_BIN_EXE_partid");
    let mut reports = Vec::new();
    for (k, jobs) in ["1", "4"].iter().enumerate() {
        let out = dir.path().join(format!("run{k}.json"));
        let status = Command::new(bin)
            .args(["verify", "--identity", "thm1", "--n-max", "5", "--s-max", "3", "--format", "json", "--jobs", jobs, "--out"])
            .arg(&out)
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.code() == Some(EXIT_PASS), || format!("exit {status}"))?;
        reports.push(std::fs::read(&out).map_err(|e| e.to_string())?);
    }
    ensure(reports[0] == reports[1], || "reports differ between runs".into())?;

    let missing = dir.path().join("unknown.json");
    let status = Command::new(bin)
        .args(["verify", "--identity", "no-such-identity", "--n-max", "3", "--out"])
        .arg(&missing)
        .status()
        .map_err(|e| e.to_string())?;
    ensure(status.code() == Some(EXIT_USAGE), || format!("unknown identity gave {status}"))?;
    ensure(!missing.exists(), || "report written for an unknown identity".into())?;

    let mut registry = Registry::standard();
    registry.register(Identity::new(
        "stub-broken",
        "always unequal at n = 2",
        &["n"],
        |c| (1..=c.n_max as i64).map(|n| vec![n]).collect(),
        |_, p| Ok(Sides::new(p[0].to_string(), if p[0] == 2 { "0".into() } else { p[0].to_string() })),
    ));
    let out = dir.path().join("stub.json");
    let args = ["partid", "verify", "--identity", "stub-broken", "--n-max", "3", "--out", out.to_str().unwrap()];
    let (mut so, mut se) = (Vec::new(), Vec::new());
    let code = run(args, &registry, &mut so, &mut se);
    ensure(code == EXIT_COUNTEREXAMPLE, || format!("stub exit {code}"))?;
    let report: serde_json::Value = serde_json::from_slice(&std::fs::read(&out).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(report["summary"]["failed"] == 1, || "stub summary".into())?;
    ensure(report["results"][1]["rhs"] == "0", || "stub witness".into())?;

    let unwritable = dir.path().join("no-dir").join("r.json");
    let args = ["partid", "verify", "--identity", "thm4", "--n-max", "2", "--out", unwritable.to_str().unwrap()];
    let code = run(args, &registry, &mut so, &mut se);
    ensure(code == EXIT_IO, || format!("unwritable path exit {code}"))?;
    Ok("byte-identical reports; exit codes 0, 1, 2, 3".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("generalized binomial equals subset enumeration, |λ| ≤ 12", oracle_equivalence),
        ("rising factorial polynomial identity, both sign forms", theorem_rising_polynomial),
        ("fixed-length scalar identities and the s = 1 case", theorem_fixed_length_and_stirling),
        ("length-r and unweighted identities, classical expansion", theorems_length_r_and_unweighted),
        ("z-marked identities and z -> 1^(s+1)", z_marked_theorems),
        ("exponential series at caps 10, binomial route at caps 6", exponential_series),
        ("composition lemma, exhaustive", lemma),
        ("union recurrence and length relations", recurrence_and_length_relations),
        ("u-expansion conjectures, n ≤ 6, u^6", conjectures),
        ("Stirling sums, partition counts, Chu–Vandermonde", combinatorial_sanity),
        ("CLI determinism and exit codes", cli_determinism_and_exit_codes),
    ];
    let mut failures = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2}  {name}: {detail} [{secs:.1}s]", k + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2}  {name}: {why} [{secs:.1}s]", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
