//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints exactly one PASS/FAIL line.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use polyaut::automorphism::twisted_iterate;
use polyaut::classifier::{self, Status};
use polyaut::poly::{parse_with, poisson_degree, ExtendedDegree};
use polyaut::reduction::{prop24_hypotheses_hold, prop24_lower_bound};
use polyaut::semigroup::{frobenius, is_member};
use polyaut::{find_elementary_reduction, parse, BoundInputs, Multidegree, PolyMap, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{random_bivariate, random_form, random_poly, random_univariate_at};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn FnOnce() -> Outcome + 'a>);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn iterate_multidegrees() -> Outcome {
    for n in 1..=10u32 {
        let got = twisted_iterate(n).multidegree();
        let want = Multidegree::from_finite(&[4 * n as u64 - 3, 4 * n as u64 - 1, 4 * n as u64 + 1]);
        check(got == want, || format!("n = {n}: got {got}, want {want}"))?;
    }
    Ok("n = 1..10 match (4n-3, 4n-1, 4n+1)".into())
}

fn keystone_invariant() -> Outcome {
    let quadric = parse("y^2 + z*x").unwrap();
    for n in 1..=10u32 {
        let map = twisted_iterate(n);
        let [f, g, h] = [map.component(0), map.component(1), map.component(2)];
        let lhs = &(g * g) + &(h * f);
        check(lhs == quadric, || format!("n = {n}: g^2 + h f = {lhs}"))?;
    }
    Ok("g^2 + h f = y^2 + zx for n = 1..10".into())
}

fn status_name(s: Status) -> String {
    serde_json::to_value(s).unwrap().as_str().unwrap().to_owned()
}

fn classifier_verdicts() -> Outcome {
    for d in [[3, 4, 5], [3, 5, 7], [4, 5, 7], [4, 5, 11]] {
        let v = classifier::classify(d[0], d[1], d[2]).map_err(|e| e.to_string())?;
        check(status_name(v.status) == "NOT_TAME", || format!("{d:?}: {:?}", v.status))?;
    }
    let v = classifier::classify(1, 3, 5).map_err(|e| e.to_string())?;
    check(status_name(v.status) == "TAME", || format!("(1,3,5): {:?}", v.status))?;
    let witness = v.witness.ok_or("(1,3,5) has no witness")?;
    let mdeg = witness.map.multidegree();
    check(mdeg == Multidegree::from_finite(&[1, 3, 5]), || format!("(1,3,5) witness has multidegree {mdeg}"))?;
    for n in 2..=10u64 {
        let d = [4 * n - 3, 4 * n - 1, 4 * n + 1];
        let (status, rule) = classifier::classify_status(d[0], d[1], d[2]).map_err(|e| e.to_string())?;
        let rule = serde_json::to_value(rule).unwrap();
        check(status_name(status) == "NOT_TAME" && rule == "R2", || format!("{d:?}: {status:?} via {rule}"))?;
        check(is_member(d[2], d[0], d[1]).is_none(), || format!("{d:?}: d3 in semigroup"))?;
    }
    Ok("listed triples NOT_TAME, (1,3,5) TAME with witness, iterate family NOT_TAME via R2".into())
}

fn semigroup_oracle() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for d1 in 2..=30u64 {
        for d2 in d1 + 1..=30 {
            if num_integer::gcd(d1, d2) != 1 {
                continue;
            }
            pairs += 1;
            let limit = 2 * d1 * d2;
            let mut reachable = vec![false; limit as usize + 1];
            for t in 0..=limit as usize {
                reachable[t] = t == 0
                    || (t >= d1 as usize && reachable[t - d1 as usize])
                    || (t >= d2 as usize && reachable[t - d2 as usize]);
            }
            for t in 0..=limit {
                let rep = is_member(t, d1, d2);
                check(rep.is_some() == reachable[t as usize], || format!("({d1},{d2}) t = {t}"))?;
                if let Some(r) = rep {
                    check(r.k1 * d1 + r.k2 * d2 == t, || format!("({d1},{d2}) t = {t}: bad representation"))?;
                }
            }
            let brute = (0..=limit).rev().find(|&t| !reachable[t as usize]).unwrap();
            let fro = frobenius(d1, d2).map_err(|e| e.to_string())?;
            check(fro == brute && fro == (d1 - 1) * (d2 - 1) - 1, || {
                format!("({d1},{d2}): frobenius {fro}, brute force {brute}")
            })?;
        }
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{pairs} coprime pairs agree with brute force"))
}

fn random_r1_triples(rng: &mut ChaCha8Rng, count: usize) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    while out.len() < count {
        let mut d = [rng.gen_range(1..=40u64), rng.gen_range(1..=40u64), rng.gen_range(1..=40u64)];
        d.sort_unstable();
        if d[1] % d[0] == 0 || is_member(d[2], d[0], d[1]).is_some() {
            out.push(d);
        }
    }
    out
}

fn witnesses(triples: &[[u64; 3]]) -> Result<Vec<PolyMap>, String> {
    let mut maps = Vec::new();
    for &d in triples {
        let v = classifier::classify(d[0], d[1], d[2]).map_err(|e| e.to_string())?;
        check(v.status == Status::Tame, || format!("{d:?}: {:?}", v.status))?;
        let w = v.witness.ok_or_else(|| format!("{d:?}: no witness"))?;
        let mdeg = w.map.multidegree();
        check(mdeg == Multidegree::from_finite(&d), || format!("{d:?}: witness multidegree {mdeg}"))?;
        check(!w.factors.is_empty(), || format!("{d:?}: no factorization"))?;
        let mut recomposed = PolyMap::identity(3);
        for factor in w.factors.iter().rev() {
            let step = factor.to_map().map_err(|e| e.to_string())?;
            let shift_free = !factor.shift.involves(factor.coordinate);
            check(shift_free, || format!("{d:?}: factor is not elementary"))?;
            recomposed = step.compose(&recomposed).map_err(|e| e.to_string())?;
        }
        check(recomposed == w.map, || format!("{d:?}: factors do not compose to the witness"))?;
        maps.push(w.map);
    }
    Ok(maps)
}

fn witness_constructor(triples: &[[u64; 3]]) -> Outcome {
    witnesses(triples)?;
    Ok(format!("{} random R1 triples: multidegree exact, factorization recomposes", triples.len()))
}

fn prop24_instance(rng: &mut ChaCha8Rng) -> (Polynomial, Polynomial, Polynomial) {
    let vars = rng.gen_range(2..=3);
    if rng.gen_bool(0.5) {
        let df = rng.gen_range(1..=5);
        let dg = rng.gen_range(df + 1..=6);
        let y_degree = rng.gen_range(0..=4);
        let f = random_poly(rng, vars, df, 3);
        let g = random_poly(rng, vars, dg, 3);
        let big_g = random_bivariate(rng, 3, y_degree);
        return (f, g, big_g);
    }
    // leading forms are powers of one linear form, so G can cancel top degrees
    let (a, b) = *[(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (4, 6)]
        .get(rng.gen_range(0..6))
        .unwrap();
    let l = random_form(rng, vars, 1, 2);
    let perturb = |rng: &mut ChaCha8Rng, d: u32| {
        let lower = rng.gen_range(1..d);
        random_poly(rng, vars, lower, 2)
    };
    let f = &l.pow(a) + &perturb(rng, a);
    let g = &l.pow(b) + &perturb(rng, b);
    let gcd = num_integer::gcd(a, b);
    let (p, s) = (a / gcd, b / gcd);
    let base = parse_with(&format!("y^{p} - x^{s}"), &["x", "y"]).unwrap();
    let k = 4 / p;
    let mut big_g = base.pow(rng.gen_range(1..=k));
    if rng.gen_bool(0.5) {
        let y_degree = rng.gen_range(0..=big_g.degree_in(1));
        big_g = &big_g + &random_bivariate(rng, 2, y_degree);
    }
    (f, g, big_g)
}

fn prop24_bound(rng: &mut ChaCha8Rng) -> Outcome {
    let (mut passing, mut tight) = (0, 0);
    let mut attempts = 0;
    while passing < 150 {
        attempts += 1;
        check(attempts < 5000, || format!("only {passing} instances passed the hypotheses"))?;
        let (f, g, big_g) = prop24_instance(rng);
        if !prop24_hypotheses_hold(&f, &g).map_err(|e| e.to_string())? {
            continue;
        }
        let (df, dg) = (f.degree().finite().unwrap(), g.degree().finite().unwrap());
        check(df < dg && dg <= 6 && big_g.degree_in(1) <= 4, || "instance outside sampling range".into())?;
        passing += 1;
        let bracket = poisson_degree(&f, &g).map_err(|e| e.to_string())?;
        let inputs = BoundInputs::from_y_degree(df, dg, bracket, u64::from(big_g.degree_in(1)))
            .map_err(|e| e.to_string())?;
        let bound = prop24_lower_bound(&inputs).map_err(|e| e.to_string())?;
        let value = big_g.substitute(&[f.clone(), g.clone()]).map_err(|e| e.to_string())?;
        let degree = value.degree().finite().map(|d| d as i64);
        check(degree.is_some_and(|d| d >= bound), || {
            format!("violation: f = {f}, g = {g}, G = {big_g}: deg {degree:?} < {bound}")
        })?;
        if degree == Some(bound) {
            tight += 1;
        }
    }
    Ok(format!("{passing} instances, 0 violations ({tight} attain the bound)"))
}

fn reduction_search(witness_maps: &[PolyMap]) -> Outcome {
    let f = PolyMap::new(["x", "y + x^3", "z + x^5"].iter().map(|c| parse(c).unwrap()).collect()).unwrap();
    let r = find_elementary_reduction(&f, 10).map_err(|e| e.to_string())?.ok_or("no reduction for (x, y+x^3, z+x^5)")?;
    check(r.achieved_degree == ExtendedDegree::Finite(1), || format!("achieved {}", r.achieved_degree))?;
    check(r.verify(&f).map_err(|e| e.to_string())?, || "reduction does not verify".into())?;
    for map in witness_maps {
        let bound = map.multidegree().to_finite().unwrap().into_iter().max().unwrap();
        let r = find_elementary_reduction(map, bound).map_err(|e| e.to_string())?;
        let r = r.ok_or_else(|| format!("no reduction for witness of multidegree {}", map.multidegree()))?;
        check(r.verify(map).map_err(|e| e.to_string())?, || "witness reduction does not verify".into())?;
    }
    let none = find_elementary_reduction(&twisted_iterate(1), 12).map_err(|e| e.to_string())?;
    check(none.is_none(), || "found a reduction of T∘N at bound 12".into())?;
    Ok(format!(
        "triangular example reduces to degree 1, {} witnesses reduce, T∘N has none within bound 12",
        witness_maps.len()
    ))
}

fn poisson_properties(rng: &mut ChaCha8Rng) -> Outcome {
    for i in 0..200 {
        let vars = rng.gen_range(2..=4);
        let (df, dg) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let f = random_poly(rng, vars, df, 4);
        let g = random_poly(rng, vars, dg, 4);
        let pd = poisson_degree(&f, &g).map_err(|e| e.to_string())?;
        check(pd <= f.degree() + g.degree(), || format!("pair {i}: [{f}, {g}] has degree {pd}"))?;
    }
    for i in 0..50 {
        let vars = rng.gen_range(2..=3);
        let (df, dp) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let f = random_poly(rng, vars, df, 3);
        let g = random_univariate_at(rng, &f, dp);
        let pd = poisson_degree(&f, &g).map_err(|e| e.to_string())?;
        check(pd == ExtendedDegree::Finite(0), || format!("dependent pair {i}: degree {pd}"))?;
    }
    Ok("200 random pairs within deg f + deg g, 50 dependent pairs give 0".into())
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    let triples = random_r1_triples(&mut rng, 50);
    let mut witness_maps = witnesses(&triples).unwrap_or_default();
    if let Ok(v) = classifier::classify(1, 3, 5) {
        witness_maps.extend(v.witness.map(|w| w.map));
    }
    let mut prop_rng = ChaCha8Rng::seed_from_u64(24);
    let mut poisson_rng = ChaCha8Rng::seed_from_u64(8);

    let criteria: Vec<Criterion> = vec![
        ("iterate multidegrees", Box::new(iterate_multidegrees)),
        ("keystone invariant", Box::new(keystone_invariant)),
        ("classifier verdicts", Box::new(classifier_verdicts)),
        ("semigroup oracle", Box::new(semigroup_oracle)),
        ("witness constructor", Box::new(|| witness_constructor(&triples))),
        ("degree lower bound", Box::new(|| prop24_bound(&mut prop_rng))),
        ("reduction search", Box::new(|| reduction_search(&witness_maps))),
        ("poisson degree", Box::new(|| poisson_properties(&mut poisson_rng))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name} [{secs:.2}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name} [{secs:.2}s]: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
