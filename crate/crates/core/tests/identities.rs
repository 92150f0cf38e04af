//! Identity registry checks: worked examples, consistency properties and fixtures.

mod naive;

use dashu::rational::RBig;
use naive::{naive_sum, pp, pw, Point};
use quartic_core::identities::{
    compose, families, find, fixture_registry, registry, sweep, verify_elliptic, verify_exact, verify_numeric, Kind,
    Status, SweepConfig,
};
use quartic_core::series::Env;
use quartic_core::{ApproxBinding, ApproxScalar, ExactBinding, ExactScalar, Meta, MetaVar, Scalar, Symbol};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DIGITS: u32 = 60;

fn r(n: i64, d: u64) -> RBig {
    RBig::from_parts(n.into(), d.into())
}

fn seed(rng: &mut ChaCha8Rng, avoid_one: bool) -> RBig {
    loop {
        let (p, s) = (rng.gen_range(1..=40i64), rng.gen_range(1..=40u64));
        if !(avoid_one && p as u64 == s) {
            return r(p, s);
        }
    }
}

/// Seeds for every symbol; values are their squares.
fn seeded(rng: &mut ChaCha8Rng) -> ExactBinding {
    let mut seeds = vec![(Symbol::Q, seed(rng, true))];
    for s in [Symbol::A, Symbol::B, Symbol::C, Symbol::D, Symbol::E] {
        seeds.push((s, seed(rng, false)));
    }
    ExactBinding::from_seeds((), &seeds)
}

fn approx(values: &[(Symbol, &str)]) -> ApproxBinding {
    let vals: Vec<_> =
        values.iter().map(|(s, v)| (*s, quartic_core::scalar_qpoch::parse_decimal(v).unwrap())).collect();
    ApproxBinding::from_values(DIGITS, &vals)
}

fn eps(s: &str) -> ApproxScalar {
    ApproxScalar::parse(s, DIGITS).unwrap()
}

fn meta(n: i64, m: i64) -> Meta {
    Meta::new(n, m)
}

/// Runs `f` on up to `want` pole-free bindings drawn from `seed`.
fn on_bindings(seed_value: u64, want: usize, mut f: impl FnMut(&ExactBinding) -> Result<(), quartic_core::QError>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed_value);
    let mut done = 0;
    for _ in 0..want * 4 {
        match f(&seeded(&mut rng)) {
            Ok(()) => done += 1,
            Err(e) if e.is_pole() => continue,
            Err(e) => panic!("{e}"),
        }
        if done == want {
            return;
        }
    }
    panic!("only {done} pole-free bindings");
}

#[test]
fn registry_has_the_documented_entries() {
    let ids: Vec<&str> = registry().iter().map(|d| d.id.as_str()).collect();
    assert!(ids.len() >= 30);
    let thm = find("thm-4u2", false).unwrap();
    assert_eq!(thm.kind, Kind::TerminatingExact);
    assert_eq!(thm.metas, vec![MetaVar::N, MetaVar::M]);
    let rx = find("cor-rahman-x", false).unwrap();
    assert_eq!((rx.kind, rx.metas.clone()), (Kind::NonterminatingNumeric, vec![MetaVar::Delta]));
    let e1 = find("ell-1", false).unwrap();
    assert_eq!((e1.kind, e1.metas.clone()), (Kind::EllipticNumeric, vec![MetaVar::M]));
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len(), "duplicate ids");
    assert!(find("fixture-corrupted-thm-4u2", false).is_err());
    assert!(find("fixture-corrupted-thm-4u2", true).is_ok());
}

#[test]
fn empty_sums_give_zero_and_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let b = seeded(&mut rng);
    let o = verify_exact(find("thm-4u2", false).unwrap(), &b, &meta(0, 0)).unwrap();
    assert!(o.pass && o.lhs.is_zero() && o.rhs.is_zero());
    let o = verify_exact(find("cor-nuova", false).unwrap(), &b, &meta(0, 0)).unwrap();
    let one = ExactScalar::from_int(1, ());
    assert!(o.pass && o.lhs == one && o.rhs == one);
}

fn naive_u_cubic_r_base(p: &Point, n: i64) -> RBig {
    let (q, a, b, d) = (&p.q, &p.a, &p.b, &p.d);
    let (q2, q3, q6) = (q * q, pw(q, 3), pw(q, 6));
    let bd = b * d;
    let num = pp(&(&q2 * a / &bd), q, n)
        * pp(&(pw(q, 4) * a / &bd), q, n)
        * pp(b, &q2, n)
        * pp(&(d / &q2), &q2, n)
        * pp(&(&bd * &bd / (&q3 * a)), &q3, n)
        * pp(&(&q3 * a * a / &bd), &q6, n);
    let den = pp(&(&bd / &q2), &q2, 2 * n)
        * pp(&(pw(q, 7) * a * a / (&bd * &bd)), &q2, n)
        * pp(&(a / b), &q3, n)
        * pp(&(&q6 * a / d), &q3, n)
        * pp(&(&bd / (&q3 * a)), &q.clone().inverse_r(), n);
    num / den
}

trait InverseR {
    fn inverse_r(self) -> RBig;
}

impl InverseR for RBig {
    fn inverse_r(self) -> RBig {
        RBig::ONE / self
    }
}

#[test]
fn thm_4u3_against_the_naive_evaluator() {
    let (n, m) = (2i64, 3i64);
    let q = r(9, 25);
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let def = find("thm-4u3", false).unwrap();
    let mut checked = 0;
    while checked < 5 {
        let (a, b, d) = (seed(&mut rng, false), seed(&mut rng, false), seed(&mut rng, false));
        let p = Point { q: q.clone(), a: a.clone(), b: b.clone(), c: RBig::ONE, d: d.clone(), e: RBig::ONE };
        let bind = ExactBinding::from_values(
            (),
            &[(Symbol::Q, q.clone()), (Symbol::A, a.clone()), (Symbol::B, b.clone()), (Symbol::D, d.clone())],
        );
        let Ok(o) = verify_exact(def, &bind, &meta(n, m)) else { continue };
        let (q2, q3, q6) = (&q * &q, pw(&q, 3), pw(&q, 6));
        let bd = &b * &d;
        let shifted_m = Point { a: &a * pw(&q, 4 * m), b: &b * pw(&q, 4 * m), d: &d * pw(&q, -2 * m), ..p.clone() };
        let w = pp(&b, &q2, 2 * m) * pp(&(&q2 * &a / &bd), &q, 2 * m) * pp(&(&q3 * &a * &a / &bd), &q6, m)
            * pp(&(pw(&q, 9) * &a * &a / (&bd * &bd * &d)), &q6, m)
            / (pp(&(pw(&q, 5) * &a * &a / (&bd * &bd)), &q2, 2 * m)
                * pp(&(&q3 * &a / &d), &q3, 2 * m)
                * pp(&(&q2 / &d), &q2, m)
                * pp(&bd, &q2, m));
        let k = (RBig::ONE - &bd / &q2) * (RBig::ONE - &q3 * &a / &bd) * (RBig::ONE - &a / &b)
            / ((RBig::ONE - &d / &q2)
                * (RBig::ONE - &q3 * &a / &d)
                * (RBig::ONE - pw(&q, 5) * &a * &a / (&bd * &bd)));
        let shifted_n = Point { a: &a * pw(&q, 5 * n), b: &b * pw(&q, 2 * n), d: &d * pw(&q, 2 * n), ..p.clone() };
        let lhs = naive_sum("U", &p, n).unwrap() - naive_sum("U", &shifted_m, n).unwrap() * w;
        let rhs = k
            * (naive_sum("U_triangle", &p, m).unwrap()
                - naive_sum("U_triangle", &shifted_n, m).unwrap() * naive_u_cubic_r_base(&p, n));
        assert_eq!(lhs, rhs);
        assert!(o.pass);
        assert_eq!(o.lhs.0, lhs);
        checked += 1;
    }
}

#[test]
fn iterations_equal_composed_recurrences() {
    for fam in families() {
        let iter = find(fam.iter_id, false).unwrap();
        on_bindings(17, 5, |b| {
            let env = Env::exact(b.clone());
            for n in 0..=3 {
                for m in 0..=3 {
                    let (l, r) = iter.evaluate(&env, &meta(n, m))?;
                    let c = compose(fam, &env, n, m)?;
                    assert_eq!(l, r, "{} n={n} m={m}", fam.iter_id);
                    assert_eq!(r, c, "{} composed n={n} m={m}", fam.iter_id);
                }
            }
            Ok(())
        });
    }
}

#[test]
fn normalized_corollaries_match_the_raw_series() {
    for id in ["cor-v2-new", "cor-chu-48d", "cor-chu-wang-40", "cor-nuova"] {
        let def = find(id, false).unwrap();
        let alt = def.alt_lhs.as_ref().expect("alternative form");
        on_bindings(23, 5, |b| {
            let env = Env::exact(def.derive_binding(b, &meta(0, 0))?);
            for v in 0..=4 {
                let mt = meta(v, v);
                assert_eq!(def.lhs.eval(&env, &mt)?, alt.eval(&env, &mt)?, "{id} at {v}");
            }
            Ok(())
        });
    }
}

#[test]
fn chu_48d_vanishes_for_odd_n() {
    let def = find("cor-chu-48d", false).unwrap();
    on_bindings(31, 5, |b| {
        for n in [1, 3, 5] {
            let o = verify_exact(def, b, &meta(n, 0))?;
            assert!(o.pass && o.lhs.is_zero(), "n={n}");
        }
        let o = verify_exact(def, b, &meta(2, 0))?;
        assert!(o.pass && !o.lhs.is_zero());
        Ok(())
    });
}

/// On `q³a² = b²d²` the theorem at `m = n` is singular term by term, so it is approached along
/// `d → d(1 + t)`: the shifted-series term vanishes and the right side tends to the special form.
#[test]
fn quartic_special_case_is_the_limit_of_thm_4u4() {
    let special = find("prop-4u4-special", false).unwrap();
    let thm = find("thm-4u4", false).unwrap();
    let quartic_core::series::Expr::Sub(_, shifted) = &thm.lhs else { panic!("thm-4u4 lhs shape") };
    let tight = eps("1e-20");
    for (q, a, b) in [("0.36", "0.3", "0.45"), ("0.5", "0.7", "0.2"), ("0.25", "0.15", "0.8")] {
        let bind = approx(&[(Symbol::Q, q), (Symbol::A, a), (Symbol::B, b)]);
        for n in 1..=4 {
            let mt = meta(n, n);
            let on = special.derive_binding(&bind, &mt).unwrap();
            let mut off = on.clone();
            let d = on.value(Symbol::D).unwrap().mul(&ApproxScalar::from_int(1, DIGITS).add(&eps("1e-30")));
            off.set_value(Symbol::D, d);
            let (sl, sr) = special.evaluate(&Env::new(bind.clone(), eps("1e-50")), &mt).unwrap();
            let env = Env::new(off, eps("1e-50"));
            let tr = thm.rhs.eval(&env, &mt).unwrap();
            let sw = shifted.eval(&env, &mt).unwrap();
            assert!(quartic_core::abel::agree(&sl, &sr, &eps("1e-50")));
            assert!(quartic_core::abel::agree(&tr, &sr, &tight), "n={n}: {tr} vs {sr}");
            assert!(sw.abs_le(&tight), "n={n}: shifted term {sw}");
        }
    }
}

#[test]
fn ustar_inversion_up_to_five() {
    let cfg = SweepConfig { trials: 10, nmax: 5, seed: 4, ..Default::default() };
    let rep = sweep(find("ustar-inversion", false).unwrap(), &cfg).unwrap();
    assert_eq!(rep.summary.pass, 60);
    assert!(rep.summary.all_passed());
}

#[test]
fn quadratic_proposition_specializes_to_rahman_x() {
    let prop = find("prop-u-quadratic", false).unwrap();
    let rx = find("cor-rahman-x", false).unwrap();
    let shift = quartic_core::Subst::lit("a=q^{2δ}a, d=q^{2+2δ}/b");
    for (q, a, b) in [("0.4", "0.2", "0.6"), ("0.55", "0.35", "0.3"), ("0.3", "0.7", "0.45")] {
        let bind = approx(&[(Symbol::Q, q), (Symbol::A, a), (Symbol::B, b)]);
        for delta in [0, 1] {
            let mt = Meta::new(0, 0).with(MetaVar::Delta, delta);
            let env = Env::new(bind.clone(), eps("1e-40"));
            let (xl, xr) = rx.evaluate(&env, &mt).unwrap();
            let penv = env.rebind(bind.substituted(&shift, &mt).unwrap());
            let (pl, pr) = prop.evaluate(&penv, &mt).unwrap();
            // The corollary carries the (1 - q^{2δ}a) normalization; the proposition does not.
            let norm = penv.bind.value(Symbol::A).unwrap().one_minus();
            let (xl, xr) = (xl.mul(&norm), xr.mul(&norm));
            let tol = eps("1e-30");
            for (u, v) in [(&xl, &pl), (&xr, &pr), (&xl, &xr)] {
                assert!(quartic_core::abel::agree(u, v, &tol), "δ={delta}: {u} vs {v}");
            }
        }
    }
}

#[test]
fn numeric_examples() {
    let tol = eps("1e-30");
    let o = verify_numeric(find("stanton-rr", false).unwrap(), &approx(&[(Symbol::Q, "0.3")]), &meta(0, 0), &tol)
        .unwrap();
    assert!(o.pass);
    let o = verify_numeric(
        find("qbd-limit", false).unwrap(),
        &approx(&[(Symbol::Q, "0.5"), (Symbol::A, "0")]),
        &meta(0, 0),
        &tol,
    )
    .unwrap();
    assert!(o.pass);
    let o = verify_numeric(
        find("cor-rahman-x", false).unwrap(),
        &approx(&[(Symbol::Q, "0.4"), (Symbol::A, "0.2"), (Symbol::B, "0.6")]),
        &meta(0, 0),
        &tol,
    )
    .unwrap();
    assert!(o.pass, "residual {}", o.residual);
}

#[test]
fn elliptic_examples() {
    let tol = eps("1e-25");
    let bind = approx(&[(Symbol::Q, "0.4"), (Symbol::A, "0.3")]);
    let o = verify_elliptic(find("ell-3", false).unwrap(), &bind, &eps("0.05"), &meta(0, 2), &tol).unwrap();
    assert!(o.pass);
    let o = verify_elliptic(find("ell-1", false).unwrap(), &bind, &eps("0.1"), &meta(0, 1), &tol).unwrap();
    assert!(o.pass && o.rhs.is_zero() && o.lhs.abs_le(&tol));
}

#[test]
fn elliptic_identities_reduce_at_p_zero() {
    let bind = approx(&[(Symbol::Q, "0.35"), (Symbol::A, "0.6")]);
    let zero = ApproxScalar::from_int(0, DIGITS);
    let tol = eps("1e-40");
    for id in ["ell-1", "ell-2", "ell-3"] {
        let def = find(id, false).unwrap();
        for m in 0..=6 {
            let mt = meta(0, m);
            let ell = verify_elliptic(def, &bind, &zero, &mt, &tol).unwrap();
            let env = Env::new(bind.clone(), tol.clone());
            let basic_l = def.lhs.to_basic().eval(&env, &mt).unwrap();
            let basic_r = def.rhs.to_basic().eval(&env, &mt).unwrap();
            assert!(quartic_core::abel::agree(&ell.lhs, &basic_l, &tol), "{id} m={m}");
            assert!(quartic_core::abel::agree(&ell.rhs, &basic_r, &tol), "{id} m={m}");
        }
    }
    let ell3 = find("ell-3", false).unwrap();
    let nuova = find("cor-nuova", false).unwrap();
    on_bindings(41, 5, |b| {
        for m in 0..=4 {
            let e = verify_exact(ell3, b, &meta(0, m))?;
            let c = verify_exact(nuova, b, &meta(0, m))?;
            assert!(e.pass && c.pass);
            assert_eq!((e.lhs, e.rhs), (c.lhs, c.rhs), "m={m}");
        }
        Ok(())
    });
}

#[test]
fn fixtures_fail_with_both_sides() {
    let cfg = SweepConfig { trials: 2, nmax: 3, mmax: 3, seed: 8, ..Default::default() };
    for def in fixture_registry() {
        let rep = sweep(def, &cfg).unwrap();
        assert!(rep.summary.fail > 0, "{} never fails", def.id);
        let bad = rep.records.iter().find(|r| r.status == Status::Fail).unwrap();
        assert!(bad.lhs.is_some() && bad.rhs.is_some() && bad.residual != "0");
    }
}

#[test]
fn sweeps_are_deterministic() {
    let cfg = SweepConfig { trials: 2, nmax: 2, mmax: 2, seed: 11, ..Default::default() };
    for id in ["thm-4v4", "eq-star", "ell-2"] {
        let def = find(id, false).unwrap();
        let a = format!("{:?}", sweep(def, &cfg).unwrap());
        let b = format!("{:?}", sweep(def, &cfg).unwrap());
        assert_eq!(a, b);
    }
}

#[test]
fn thm_4v4_sweep_counts() {
    let cfg = SweepConfig { trials: 25, nmax: 4, mmax: 4, seed: 7, ..Default::default() };
    let rep = sweep(find("thm-4v4", false).unwrap(), &cfg).unwrap();
    assert_eq!((rep.summary.pass, rep.summary.fail), (625, 0));
}

#[test]
fn mode_mismatch_is_refused() {
    let cfg = SweepConfig { mode: quartic_core::identities::Mode::Exact, ..Default::default() };
    assert!(sweep(find("stanton-rr", false).unwrap(), &cfg).is_err());
}
