//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rs_listdec::decoder::{self, error_locator_check};
use rs_listdec::interp::{self, Interpolation};
use rs_listdec::{bench, channel, example, oracle, rootfind};
use rs_listdec::{Error, Field, FieldCtx, FieldElement, GfCode, ReedSolomon};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let spent = start.elapsed();
    check(spent < limit, || format!("took {spent:?}, limit {limit:?}"))?;
    Ok(spent)
}

/// Failures of the basis shape and module preservation for one run.
fn groebner_failure(run: &Interpolation<FieldElement>, f: &FieldCtx) -> Option<String> {
    let lts = run.basis.leading_terms().ok()?;
    let ys: BTreeSet<usize> = lts.iter().map(|t| t.y).collect();
    if ys != (0..=run.params.l).collect() {
        return Some(format!("leading y-degrees {ys:?}"));
    }
    for (i, g) in run.initial.gens().iter().enumerate() {
        match run.basis.normal_form(g, f) {
            Ok(r) if r.is_zero() => {}
            _ => return Some(format!("initial generator {i} does not reduce to zero")),
        }
    }
    None
}

fn membership_failure(
    code: &GfCode,
    word: &[FieldElement],
    run: &Interpolation<FieldElement>,
) -> Option<String> {
    let f = code.field();
    let params = &run.params;
    for (&a, &b) in code.alphas().iter().zip(word) {
        let mult = run.q.multiplicity(a, b, f).ok()?;
        if mult < params.m {
            return Some(format!("multiplicity {mult} < {} at ({a}, {b})", params.m));
        }
    }
    if run.q.y_degree().is_none_or(|d| d > params.l) {
        return Some(format!("y-degree {:?} above l = {}", run.q.y_degree(), params.l));
    }
    if !params.below_y_degree_bound(params.l) {
        return Some(format!("l = {} not below the y-degree bound", params.l));
    }
    None
}

#[derive(Default)]
struct Tally {
    runs: usize,
    groebner: Vec<String>,
    membership: Vec<String>,
}

impl Tally {
    fn record(&mut self, label: &str, code: &GfCode, word: &[FieldElement], run: &Interpolation<FieldElement>) {
        self.runs += 1;
        if let Some(e) = groebner_failure(run, code.field()) {
            self.groebner.push(format!("{label}: {e}"));
        }
        if let Some(e) = membership_failure(code, word, run) {
            self.membership.push(format!("{label}: {e}"));
        }
    }

    fn verdict(&self, failures: &[String]) -> Outcome {
        match failures.first() {
            None => Ok(format!("{} runs", self.runs)),
            Some(first) => Err(format!("{} of {} runs failed, first: {first}", failures.len(), self.runs)),
        }
    }
}

fn worked_example(tally: &mut Tally) -> Outcome {
    let start = Instant::now();
    let report = example::run().map_err(|e| e.to_string())?;
    let spent = within(Duration::from_secs(1), start)?;
    check(report.is_exact(), || format!("mismatched {:?}", report.mismatches))?;
    let code = example::code();
    let word = example::word(&code);
    let reference = oracle::min_poly(&code, &word, example::M, example::L).map_err(|e| e.to_string())?;
    check(reference.same_up_to_scalar(&report.interpolation.q, code.field()), || {
        "oracle disagrees".into()
    })?;
    tally.record("worked example", &code, &word, &report.interpolation);
    Ok(format!("exact match in {spent:?}"))
}

fn random_code(rng: &mut ChaCha8Rng) -> GfCode {
    let q = [5u64, 7, 11, 13][rng.gen_range(0..4)];
    let f = FieldCtx::prime(q).unwrap();
    let n = rng.gen_range(4..=q.min(10) as usize);
    let k = rng.gen_range(2..=n - 2);
    let alphas = sample(rng, q as usize, n)
        .into_iter()
        .map(|i| f.elem(i as u64).unwrap())
        .collect();
    ReedSolomon::new(f, n, k, Some(alphas)).unwrap()
}

/// Half the words are uniform, half are codewords with a few errors.
fn random_received(code: &GfCode, rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
    let f = code.field();
    if rng.gen_bool(0.5) {
        return channel::random_word(code.n(), rng, f);
    }
    let msg = channel::random_message(code.k(), rng, f);
    let mut v = code.encode(&msg).unwrap();
    let t = rng.gen_range(0..=code.n() - code.k());
    channel::corrupt(&mut v, t, rng, f).unwrap();
    v
}

fn oracle_equivalence(tally: &mut Tally) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let trials = 200;
    for trial in 0..trials {
        let code = random_code(&mut rng);
        let m = rng.gen_range(1..=3);
        let v = random_received(&code, &mut rng);
        let label = format!(
            "trial {trial} (q={}, n={}, k={}, m={m})",
            code.field().order(),
            code.n(),
            code.k()
        );
        let run = interp::interpolate_full(&code, &v, m, None).map_err(|e| format!("{label}: {e}"))?;
        let reference = oracle::min_poly(&code, &v, m, run.params.l).map_err(|e| format!("{label}: {e}"))?;
        check(reference.same_up_to_scalar(&run.q, code.field()), || {
            format!("{label}: oracle disagrees")
        })?;
        tally.record(&label, &code, &v, &run);
    }
    let spent = within(Duration::from_secs(60), start)?;
    Ok(format!("{trials} instances agree in {spent:?}"))
}

fn rs63() -> GfCode {
    ReedSolomon::new(FieldCtx::prime(7).unwrap(), 6, 3, None).unwrap()
}

fn list_guarantee() -> Outcome {
    let code = rs63();
    let f = code.field();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let trials = 500;
    let mut inside = 0;
    for trial in 0..trials {
        let msg = channel::random_message(code.k(), &mut rng, f);
        let mut v = code.encode(&msg).unwrap();
        channel::corrupt(&mut v, 2, &mut rng, f).unwrap();
        let out = decoder::list_decode(&code, &v, 2).map_err(|e| e.to_string())?;
        if out.guarantee_radius.is_some_and(|r| r >= 2) {
            inside += 1;
        }
        check(out.candidates.iter().any(|c| c.message == msg), || {
            format!("trial {trial}: message lost (w = {})", out.w)
        })?;
    }
    check(inside == trials, || format!("2 < n - w/m held in only {inside} of {trials} trials"))?;
    Ok(format!("{trials}/{trials} recovered, radius condition held in all"))
}

fn unique_exhaustive() -> Outcome {
    let start = Instant::now();
    let code = rs63();
    let f = code.field();
    let mut cases = 0;
    for index in 0..343u64 {
        let digits = [index % 7, index / 7 % 7, index / 49];
        let msg = rs_listdec::UniPoly::from_indices(&digits, f).unwrap();
        let c = code.encode(&msg).unwrap();
        let mut patterns = vec![c.clone()];
        for pos in 0..6 {
            for e in 1..7 {
                let mut v = c.clone();
                v[pos] = f.add(v[pos], f.elem(e).unwrap());
                patterns.push(v);
            }
        }
        for v in patterns {
            let got = decoder::unique_decode(&code, &v).map_err(|e| format!("message {digits:?}: {e}"))?;
            check(got == msg, || format!("message {digits:?}: decoded {:?}", got.to_indices(f)))?;
            cases += 1;
        }
    }
    let spent = within(Duration::from_secs(30), start)?;
    check(cases == 12_691, || format!("{cases} cases"))?;
    Ok(format!("{cases} cases in {spent:?}"))
}

fn unique_matches_interpolation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let trials = 200;
    for trial in 0..trials {
        let code = random_code(&mut rng);
        let f = code.field();
        let msg = channel::random_message(code.k(), &mut rng, f);
        let c = code.encode(&msg).unwrap();
        let mut v = c.clone();
        let t = rng.gen_range(0..=code.tau());
        channel::corrupt(&mut v, t, &mut rng, f).unwrap();
        let label = format!("trial {trial} (n={}, k={}, t={t})", code.n(), code.k());
        let h = decoder::unique_decode(&code, &v).map_err(|e| format!("{label}: {e}"))?;
        let (q, _) = interp::interpolate_q(&code, &v, 1, Some(1)).map_err(|e| format!("{label}: {e}"))?;
        let roots = rootfind::y_roots(&q, code.k(), f).map_err(|e| format!("{label}: {e}"))?;
        check(roots == vec![h.clone()], || format!("{label}: roots {roots:?} vs {h:?}"))?;
        check(h == msg, || format!("{label}: wrong message"))?;
        let locator = error_locator_check(&code, &v, &c).map_err(|e| format!("{label}: {e}"))?;
        check(locator.same_up_to_scalar(&q, f), || format!("{label}: not f_e (y - h_c)"))?;
    }
    Ok(format!("{trials}/{trials} agree"))
}

fn complexity_scaling() -> Outcome {
    let field = FieldCtx::new(2, 8, None).unwrap();
    let ns = [16, 32, 64];
    let ms = [1, 2, 3, 4];
    let rows = bench::sweep(&field, &ns, &ms, 1).map_err(|e| e.to_string())?;
    let count = |n: usize, m: usize| {
        rows.iter()
            .find(|r| r.n == n && r.m == m)
            .map(|r| r.mult_count)
            .unwrap()
    };
    for &m in &ms {
        for pair in ns.windows(2) {
            check(count(pair[0], m) < count(pair[1], m), || {
                format!("not increasing in n at m={m}: {pair:?}")
            })?;
        }
    }
    for &n in &ns {
        for pair in ms.windows(2) {
            check(count(n, pair[0]) < count(n, pair[1]), || {
                format!("not increasing in m at n={n}: {pair:?}")
            })?;
        }
    }
    let points: Vec<(f64, f64)> = ms.iter().map(|&m| (m as f64, count(32, m) as f64)).collect();
    let slope = bench::log_log_slope(&points);
    check(slope <= 5.5, || format!("slope {slope:.3} in m at n=32"))?;
    Ok(format!("monotone; slope in m at n=32 is {slope:.3}"))
}

fn degenerate_inputs() -> Outcome {
    let f = FieldCtx::prime(7).unwrap();
    check(
        matches!(ReedSolomon::new(f.clone(), 6, 1, None), Err(Error::KTooSmall(1))),
        || "k = 1 accepted by the code".into(),
    )?;
    check(
        matches!(interp::choose_params(6, 1, 1, None), Err(Error::KTooSmall(1))),
        || "k = 1 accepted by the interpolation".into(),
    )?;

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let code = random_code(&mut rng);
        let f = code.field();
        let msg = channel::random_message(code.k(), &mut rng, f);
        let c = code.encode(&msg).unwrap();
        let m = rng.gen_range(1..=3);
        let out = decoder::list_decode(&code, &c, m).map_err(|e| e.to_string())?;
        check(
            out.candidates.first().is_some_and(|x| x.message == msg && x.distance == 0),
            || "codeword not listed at distance 0".into(),
        )?;
        let h = decoder::unique_decode(&code, &c).map_err(|e| e.to_string())?;
        check(h == msg, || "unique decoder altered a codeword".into())?;
    }

    let code = rs63();
    let f = code.field();
    let mut far = 0;
    while far < 100 {
        let v = channel::random_word(6, &mut rng, f);
        let (_, _, distance) = oracle::nearest(&code, &v).map_err(|e| e.to_string())?;
        if distance <= code.tau() {
            continue;
        }
        far += 1;
        match decoder::unique_decode(&code, &v) {
            Err(Error::NoCodewordInRange) => {}
            other => return Err(format!("far word {v:?} gave {other:?}")),
        }
    }
    Ok("k < 2 rejected, 50 exact codewords at distance 0, 100 far words refused".into())
}

fn main() -> ExitCode {
    let mut tally = Tally::default();
    let mut results: Vec<(&str, Outcome)> = vec![
        ("1 worked example", worked_example(&mut tally)),
        ("2 oracle equivalence", oracle_equivalence(&mut tally)),
    ];
    results.push(("3 groebner criterion", tally.verdict(&tally.groebner)));
    results.push(("4 membership", tally.verdict(&tally.membership)));
    results.push(("5 list guarantee", list_guarantee()));
    results.push(("6 unique decoder exhaustive", unique_exhaustive()));
    results.push(("7 unique vs interpolation", unique_matches_interpolation()));
    results.push(("8 complexity scaling", complexity_scaling()));
    results.push(("9 degenerate inputs", degenerate_inputs()));

    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
