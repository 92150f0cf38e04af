//! Acceptance criteria, one pass/fail line each.
//!
//! Runs without the test harness; exits non-zero when any criterion fails.

#[path = "../../core/tests/naive/mod.rs"]
mod naive;

use std::process::Command;
use std::time::{Duration, Instant};

use dashu::rational::RBig;
use quartic_core::abel::{check_lemma, check_pair, check_r_split, pairs};
use quartic_core::identities::{
    compose, families, find, fixture_registry, sweep, verify_elliptic, verify_exact, Report, Status, SweepConfig,
};
use quartic_core::series::{builtin, partial_sum, Env, BUILTIN_NAMES};
use quartic_core::{ApproxBinding, ApproxScalar, ExactBinding, ExactScalar, Meta, QError, QResult, Scalar, Symbol};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DIGITS: u32 = 60;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn rat(rng: &mut ChaCha8Rng) -> RBig {
    RBig::from_parts(rng.gen_range(1..=40i64).into(), rng.gen_range(1..=40u64).into())
}

fn signed_rat(rng: &mut ChaCha8Rng) -> ExactScalar {
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    ExactScalar(rat(rng) * RBig::from(sign))
}

/// A seeded binding of every symbol, `q`'s seed different from 1.
fn seeded(rng: &mut ChaCha8Rng) -> ExactBinding {
    let q = loop {
        let r = rat(rng);
        if r != RBig::ONE {
            break r;
        }
    };
    let mut seeds = vec![(Symbol::Q, q)];
    for s in [Symbol::A, Symbol::B, Symbol::C, Symbol::D, Symbol::E] {
        seeds.push((s, rat(rng)));
    }
    ExactBinding::from_seeds((), &seeds)
}

/// Applies `f` to fresh bindings until it succeeds, skipping poles.
fn pole_free<T>(rng: &mut ChaCha8Rng, mut f: impl FnMut(&ExactBinding) -> QResult<T>) -> Result<T, String> {
    for _ in 0..50 {
        match f(&seeded(rng)) {
            Ok(t) => return Ok(t),
            Err(e) if e.is_pole() => continue,
            Err(e) => return Err(e.to_string()),
        }
    }
    Err("50 consecutive bindings hit poles".into())
}

fn sweep_all_pass(id: &str, cfg: &SweepConfig) -> Result<Report, String> {
    let def = find(id, false).map_err(|e| e.to_string())?;
    let rep = sweep(def, cfg).map_err(|e| e.to_string())?;
    if rep.summary.all_passed() {
        Ok(rep)
    } else {
        let bad = rep.records.iter().find(|r| r.status != Status::Pass).unwrap();
        Err(format!("{id}: {:?} at n={:?} m={:?} δ={:?} binding {:?}", bad.status, bad.n, bad.m, bad.delta, bad.binding))
    }
}

fn within(t: Duration, limit_s: u64) -> bool {
    t.as_secs() < limit_s
}

fn c1_lemma() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut held = 0;
    for _ in 0..500 {
        let n = rng.gen_range(0..=12usize);
        let a: Vec<_> = (0..=n).map(|_| signed_rat(&mut rng)).collect();
        let b: Vec<_> = (0..=n).map(|_| signed_rat(&mut rng)).collect();
        let (l, r) = check_lemma(&a, &b).unwrap();
        held += usize::from(l == r);
    }
    let t = start.elapsed();
    outcome(held == 500 && within(t, 5), format!("{held}/500 random sequence pairs, {t:.2?} (limit 5s)"))
}

fn c2_pairs() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut runs, mut passed) = (0, 0);
    for p in pairs() {
        for _ in 0..25 {
            runs += 1;
            let all = pole_free(&mut rng, |b| {
                let env = Env::exact(b.clone());
                (0..=4).map(|n| check_pair(p, &env, n).map(|r| r.passed())).collect::<QResult<Vec<bool>>>()
            });
            if matches!(all, Ok(v) if v.iter().all(|&x| x)) {
                passed += 1;
            }
        }
    }
    let t = start.elapsed();
    outcome(
        passed == runs && runs == 150 && within(t, 120),
        format!("{passed}/{runs} pair-runs pass all five sub-checks for n<=4, {t:.2?} (limit 2min)"),
    )
}

fn c3_r_split() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut runs, mut passed) = (0, 0);
    for p in pairs() {
        for _ in 0..25 {
            runs += 1;
            let all = pole_free(&mut rng, |b| {
                let env = Env::exact(b.clone());
                let mut ok = true;
                for k in 0..=4 {
                    for n in 0..=4 {
                        ok &= check_r_split(p, k, n, &env)?.ok;
                    }
                }
                Ok(ok)
            });
            passed += usize::from(all == Ok(true));
        }
    }
    let t = start.elapsed();
    outcome(
        passed == runs && within(t, 120),
        format!("{passed}/{runs} bindings split R exactly for k,n<=4, {t:.2?} (limit 2min)"),
    )
}

fn exact_cfg(seed: u64, nmax: i64, mmax: i64) -> SweepConfig {
    SweepConfig { trials: 25, seed, nmax, mmax, ..Default::default() }
}

fn c4_theorems() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for id in ["thm-4u2", "thm-4u3", "thm-4u4", "thm-4v2", "thm-4v3", "thm-4v4"] {
        match sweep_all_pass(id, &exact_cfg(4, 4, 4)) {
            Ok(r) => total += r.summary.pass,
            Err(e) => return outcome(false, e),
        }
    }
    let t = start.elapsed();
    outcome(total >= 3750 && within(t, 600), format!("{total} exact zero residuals over (n,m) in [0,4]^2, {t:.2?} (limit 10min)"))
}

fn c5_corollaries() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    for (id, nmax, mmax) in [
        ("prop-4u4-special", 5, 0),
        ("ustar-inversion", 5, 0),
        ("cor-v2-new", 0, 4),
        ("cor-chu-48d", 5, 0),
        ("cor-chu-wang-40", 0, 4),
        ("cor-nuova", 0, 4),
    ] {
        match sweep_all_pass(id, &exact_cfg(5, nmax, mmax)) {
            Ok(r) => counts.push(format!("{id} {}", r.summary.pass)),
            Err(e) => return outcome(false, e),
        }
    }
    // The odd-n branch of cor-chu-48d: the sum itself must vanish.
    let def = find("cor-chu-48d", false).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let mut zeros = 0;
    for _ in 0..25 {
        let z = pole_free(&mut rng, |b| {
            [1, 3, 5].iter().map(|&n| verify_exact(def, b, &Meta::new(n, 0)).map(|o| o.pass && o.lhs.is_zero())).collect::<QResult<Vec<_>>>()
        });
        zeros += z.map_or(0, |v| v.iter().filter(|&&x| x).count());
    }
    let t = start.elapsed();
    outcome(zeros == 75, format!("{}; odd-n sums exactly zero {zeros}/75, {t:.2?}", counts.join(", ")))
}

fn c6_iterations() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut fams_ok, mut checks) = (0, 0);
    for fam in families() {
        let iter = find(fam.iter_id, false).unwrap();
        let mut good = 0;
        for _ in 0..25 {
            let r = pole_free(&mut rng, |b| {
                let env = Env::exact(b.clone());
                let mut ok = true;
                for n in 0..=4 {
                    for m in 0..=4 {
                        let (l, r) = iter.evaluate(&env, &Meta::new(n, m))?;
                        ok &= l == r && r == compose(fam, &env, n, m)?;
                    }
                }
                Ok(ok)
            });
            good += usize::from(r == Ok(true));
            checks += 25;
        }
        fams_ok += usize::from(good == 25);
    }
    let t = start.elapsed();
    outcome(fams_ok == 6, format!("{fams_ok}/6 families: m-step display equals composed recurrence ({checks} (n,m) checks), {t:.2?}"))
}

fn c7_nonterminating() -> Outcome {
    let start = Instant::now();
    let cfg = SweepConfig { trials: 10, seed: 7, precision: 60, eps: "1e-30".into(), ..Default::default() };
    let mut n = 0;
    for id in [
        "prop-u-quadratic",
        "spec-bd-q2",
        "andrews-ismail-stanton",
        "cor-rahman-x",
        "prop-u-cubic",
        "u-cubic-b-eq-a",
        "qbd-limit",
        "cor-rahman-y",
        "eq-star",
        "cor-q2f1",
        "stanton-rr",
        "cor-qq2f1",
    ] {
        match sweep_all_pass(id, &cfg) {
            Ok(r) => n += r.summary.pass,
            Err(e) => return outcome(false, e),
        }
    }
    let t = start.elapsed();
    outcome(within(t, 300), format!("12 identities, {n} bindings (δ=0,1 where taken) within 1e-30 at 60 digits, {t:.2?} (limit 5min)"))
}

fn approx(values: &[(Symbol, &str)]) -> ApproxBinding {
    let vals: Vec<_> = values.iter().map(|(s, v)| (*s, quartic_core::scalar_qpoch::parse_decimal(v).unwrap())).collect();
    ApproxBinding::from_values(DIGITS, &vals)
}

fn c8_elliptic() -> Outcome {
    let start = Instant::now();
    let mut runs = 0;
    for p in ["0.02", "0.05", "0.1"] {
        let cfg = SweepConfig { trials: 5, seed: 8, mmax: 6, eps: "1e-25".into(), p: p.into(), ..Default::default() };
        for id in ["ell-1", "ell-2", "ell-3"] {
            match sweep_all_pass(id, &cfg) {
                Ok(r) => runs += r.summary.pass,
                Err(e) => return outcome(false, format!("p={p}: {e}")),
            }
        }
    }
    let tol = ApproxScalar::parse("1e-25", DIGITS).unwrap();
    let ell1 = find("ell-1", false).unwrap();
    let mut odd = 0;
    for (q, a) in [("0.3", "0.45"), ("0.55", "0.2"), ("0.65", "0.8")] {
        for p in ["0.02", "0.05", "0.1"] {
            let nome = ApproxScalar::parse(p, DIGITS).unwrap();
            for m in [1, 3, 5] {
                let o = verify_elliptic(ell1, &approx(&[(Symbol::Q, q), (Symbol::A, a)]), &nome, &Meta::new(0, m), &tol);
                odd += usize::from(matches!(o, Ok(o) if o.lhs.abs_le(&tol)));
            }
        }
    }
    let zero = ApproxScalar::from_int(0, DIGITS);
    let tight = ApproxScalar::parse("1e-40", DIGITS).unwrap();
    let mut reductions = 0;
    for id in ["ell-1", "ell-2", "ell-3"] {
        let def = find(id, false).unwrap();
        let bind = approx(&[(Symbol::Q, "0.35"), (Symbol::A, "0.6")]);
        let mut ok = true;
        for m in 0..=6 {
            let mt = Meta::new(0, m);
            let ell = verify_elliptic(def, &bind, &zero, &mt, &tight).unwrap();
            let env = Env::new(bind.clone(), tight.clone());
            ok &= quartic_core::abel::agree(&ell.lhs, &def.lhs.to_basic().eval(&env, &mt).unwrap(), &tight);
            ok &= quartic_core::abel::agree(&ell.rhs, &def.rhs.to_basic().eval(&env, &mt).unwrap(), &tight);
        }
        reductions += usize::from(ok);
    }
    let (ell3, nuova) = (find("ell-3", false).unwrap(), find("cor-nuova", false).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(88);
    let mut exact_same = 0;
    for _ in 0..10 {
        let same = pole_free(&mut rng, |b| {
            let mut ok = true;
            for m in 0..=4 {
                let (e, c) = (verify_exact(ell3, b, &Meta::new(0, m))?, verify_exact(nuova, b, &Meta::new(0, m))?);
                ok &= e.pass && c.pass && e.lhs == c.lhs && e.rhs == c.rhs;
            }
            Ok(ok)
        });
        exact_same += usize::from(same == Ok(true));
    }
    let t = start.elapsed();
    outcome(
        odd == 27 && reductions == 3 && exact_same == 10,
        format!(
            "{runs} sweeps within 1e-25 at p in {{0.02,0.05,0.1}}, m<=6; odd-m ell-1 |LHS|<1e-25 {odd}/27; p=0 reductions {reductions}/3; ell-3 = cor-nuova exactly {exact_same}/10, {t:.2?}"
        ),
    )
}

fn c9_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut agree = 0;
    let mut total = 0;
    for name in BUILTIN_NAMES {
        let def = builtin(name).unwrap();
        let mut done = 0;
        while done < 100 {
            let vals: Vec<RBig> = (0..6).map(|_| rat(&mut rng)).collect();
            if vals[0] == RBig::ONE {
                continue;
            }
            let point = naive::Point {
                q: vals[0].clone(),
                a: vals[1].clone(),
                b: vals[2].clone(),
                c: vals[3].clone(),
                d: vals[4].clone(),
                e: vals[5].clone(),
            };
            let syms = [Symbol::Q, Symbol::A, Symbol::B, Symbol::C, Symbol::D, Symbol::E];
            let bind: Vec<_> = syms.iter().copied().zip(vals).collect();
            let env = Env::exact(ExactBinding::from_values((), &bind));
            let count = rng.gen_range(0..=5);
            let ours = partial_sum(&def, count, &env, &Meta::new(count, count));
            let theirs = naive::naive_sum(name, &point, count);
            match (ours, theirs) {
                (Ok(x), Some(y)) => {
                    agree += usize::from(x.0 == y);
                    total += 1;
                    done += 1;
                }
                (Err(e), None) if e.is_pole() || matches!(e, QError::DivisionByZero) => {}
                _ => {
                    total += 1;
                    done += 1;
                }
            }
        }
    }
    let t = start.elapsed();
    outcome(agree == total && total == 1200, format!("{agree}/{total} template sums equal the naive evaluator (12 series x 100), {t:.2?}"))
}

fn c10_cli() -> Outcome {
    let run = |args: &[&str]| Command::new(env!("CARGO_BIN_EXE_quartic")).args(args).env_remove("QSERIES_PRECISION").output().unwrap();
    let args = ["verify", "--id", "all", "--seed", "1", "--format", "json"];
    let (a, b) = (run(&args), run(&args));
    let all_ok = a.status.code() == Some(0);
    let identical = a.stdout == b.stdout && !a.stdout.is_empty();
    let fixture = fixture_registry().iter().find(|d| d.id.starts_with("fixture-corrupted")).unwrap();
    let bad = run(&["verify", "--id", &fixture.id, "--fixtures", "--seed", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&bad.stdout).unwrap_or_default();
    let dual = v["records"]
        .as_array()
        .is_some_and(|rs| rs.iter().any(|r| r["status"] == "fail" && r["lhs"].is_string() && r["rhs"].is_string()));
    outcome(
        all_ok && identical && bad.status.code() == Some(1) && dual,
        format!(
            "verify --id all --seed 1 exit {:?}; rerun byte-identical {identical}; corrupted fixture exit {:?} with dual-value record {dual}",
            a.status.code(),
            bad.status.code()
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 generic Abel lemma", c1_lemma),
        ("2 difference-pair suite", c2_pairs),
        ("3 R-split suite", c3_r_split),
        ("4 terminating theorems", c4_theorems),
        ("5 terminating corollaries and specials", c5_corollaries),
        ("6 recurrence/iteration consistency", c6_iterations),
        ("7 nonterminating identities", c7_nonterminating),
        ("8 elliptic suite", c8_elliptic),
        ("9 oracle equivalence", c9_oracle),
        ("10 CLI contract", c10_cli),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let o = f();
        failed += usize::from(!o.ok);
        println!("{} criterion {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {}/10 criteria pass", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
