//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cominq::cayley::{self, parse_table, serialize, ClassLabel, MultTable, QKElement};
use cominq::qconst::{self, GWTables};
use cominq::{CominSpace, Family};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// The spaces of criteria 3, 4 and 10.
fn families() -> Vec<Family> {
    let mut out = Vec::new();
    for n in 2..=8 {
        for m in 1..n {
            out.push(Family::Gr { m, n });
        }
    }
    out.extend((2..=5).map(Family::LG));
    out.extend((4..=6).map(Family::OG));
    out.extend((3..=8).map(Family::Q));
    out.extend([Family::E6P6, Family::E7P7]);
    out
}

fn criterion_1(t: &MultTable, e6: &CominSpace) -> Outcome {
    let start = Instant::now();
    let checks = cayley::verify_table(t, e6).unwrap();
    let elapsed = start.elapsed();
    let failed: Vec<_> = checks.iter().filter(|c| !c.pass).map(|c| c.check.clone()).collect();
    let assoc = checks.iter().find(|c| c.check == "associativity").unwrap();

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let all = ClassLabel::all();
    let mut detected = 0;
    let trials = 20;
    for k in 0..trials {
        let &(a, b) = &t.pairs()[rng.gen_range(0..t.len())];
        let row = t.product(a, b);
        // alternate between existing terms and arbitrary slots
        let (q, w) = if k % 2 == 0 {
            let terms: Vec<_> = row.terms().collect();
            let (q, w, _) = terms[rng.gen_range(0..terms.len())];
            (q, w)
        } else {
            (rng.gen_range(0..=2), all[rng.gen_range(1..all.len())])
        };
        let mut bad = t.clone();
        let bumped = row.checked_add(&QKElement::monomial(1, q, w)).unwrap();
        bad.set_product(a, b, bumped).unwrap();
        let assoc_fails = !cayley::verify_associativity(&bad).unwrap().pass;
        let degree_fails = !cayley::verify_degree_bound(&bad, 2).pass;
        let sign_fails = match cayley::infer_index(&bad) {
            Ok(index) => !cayley::verify_codim_sign(&bad, index).pass,
            Err(_) => true,
        };
        if assoc_fails || degree_fails || sign_fails {
            detected += 1;
        }
    }
    let pass = failed.is_empty() && elapsed < Duration::from_secs(10) && detected == trials;
    outcome(
        pass,
        format!(
            "{}; failed checks {failed:?}; {detected}/{trials} perturbations detected; {:.2} s",
            assoc.detail,
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_2(t: &MultTable, e6: &CominSpace) -> Outcome {
    let max = t.max_q_degree();
    let diam = e6.diameter();
    let top = ClassLabel::new(16, 0).unwrap();
    let sq = t.product(top, top);
    let sharp = sq == "q^2 O8''".parse().unwrap();
    outcome(
        max == 2 && diam == 2 && sharp,
        format!("max q-degree {max}, diameter(E6/P6) {diam}, O16 * O16 = {sq}"),
    )
}

fn criterion_3(spaces: &[CominSpace], build: Duration) -> Outcome {
    let start = Instant::now();
    let bad: Vec<String> = spaces
        .iter()
        .filter(|x| x.diameter() != x.dx_table().d2)
        .map(|x| format!("{} ({} vs {})", x.family, x.diameter(), x.dx_table().d2))
        .collect();
    let elapsed = build + start.elapsed();
    outcome(
        bad.is_empty() && elapsed < Duration::from_secs(5),
        format!(
            "{} spaces, mismatches {bad:?}; {:.2} s including W^P construction",
            spaces.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_4(spaces: &[CominSpace]) -> Outcome {
    let mut bad = Vec::new();
    for x in spaces {
        match x.verify_dx3() {
            Ok(r) if r.pass => {}
            Ok(_) => bad.push(x.family.to_string()),
            Err(e) => bad.push(format!("{}: {e}", x.family)),
        }
    }
    let e7 = spaces.iter().find(|x| x.family == Family::E7P7).unwrap();
    let word = [1, 3, 4, 2, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7];
    let x1 = e7.x_small(1).unwrap();
    let g1 = e7.gamma1(&x1).unwrap();
    let expected = e7.element(&word).unwrap();
    let first = e7.wp.coset_index(&g1).unwrap() == e7.wp.coset_index(&expected).unwrap();
    let second = e7.gamma1(&e7.x_small(2).unwrap()).unwrap() == *e7.u_max();
    outcome(
        bad.is_empty() && first && second,
        format!(
            "{} spaces, failures {bad:?}; E7 Gamma_1(X_1) matches 18-letter word: {first}; Gamma_1(X_2) = X: {second}",
            spaces.len()
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut nonzero = 0;
    let mut sums = 0;
    for d in 1..=12 {
        for dmax in 0..d {
            for _ in 0..100 {
                let c: Vec<i64> = (0..=dmax).map(|_| rng.gen_range(-1_000_000..=1_000_000)).collect();
                sums += 1;
                if qconst::cancellation_sum(d, dmax, |k| c[k]).unwrap() != 0 {
                    nonzero += 1;
                }
            }
        }
    }
    let mut count_bad = 0;
    for d in 1..=12 {
        let seqs = qconst::enumerate_sequences(d);
        for d0 in 0..=d {
            for len in 1..=d + 1 {
                let brute = seqs.iter().filter(|s| s.d0() == d0 && s.entries().len() == len).count();
                if qconst::count_sequences(d, d0, len).unwrap() != brute as i64 {
                    count_bad += 1;
                }
            }
        }
    }
    let alt_bad = (2..=20).filter(|&k| qconst::alt_binomial_sum(k).unwrap() != 0).count();
    outcome(
        nonzero == 0 && count_bad == 0 && alt_bad == 0,
        format!(
            "{nonzero}/{sums} cancellation sums nonzero; {count_bad} count mismatches; {alt_bad} nonzero alternating sums"
        ),
    )
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut compared = 0;
    let mut mismatches = 0;
    for seed in 0..200u64 {
        let n = 1 + (seed % 4) as usize;
        let dmax = (seed / 4 % 5) as usize;
        let t = GWTables::random(n, dmax, seed, -9, 9).unwrap();
        let c = qconst::check_oracles(&t).unwrap();
        compared += c.compared;
        mismatches += c.mismatches;
    }
    let elapsed = start.elapsed();
    outcome(
        mismatches == 0 && elapsed < Duration::from_secs(30),
        format!(
            "200 tables, {compared} constants, {mismatches} mismatches; {:.2} s",
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_7(spaces: &[CominSpace]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut elements = 0;
    let mut bad = Vec::new();
    let mut used = 0;
    for x in spaces.iter().filter(|x| x.wp.len() <= 56) {
        used += 1;
        let rs = x.root_system();
        for u in &x.wp.reps {
            elements += 1;
            let d = x.deg_dist(u).unwrap();
            for _ in 0..50 {
                let w = rs.random_reduced_word(u, &mut rng).unwrap();
                if w.iter().filter(|&&i| i == x.node).count() != d {
                    bad.push(x.family.to_string());
                    break;
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{used} spaces, {elements} representatives, 50 words each; disagreements {bad:?}"),
    )
}

fn criterion_8(t: &MultTable, e6: &CominSpace, e7: &CominSpace) -> Outcome {
    let link = cayley::link_labels(t, &e6.wp).unwrap();
    let sizes = (e6.wp.len(), e7.wp.len());
    outcome(
        link.pass && sizes == (27, 56),
        format!("{}; |W^P| = {} (E6), {} (E7)", link.detail, sizes.0, sizes.1),
    )
}

fn criterion_9(t: &MultTable) -> Outcome {
    let canonical = serialize(t);
    let mut bad_lines = 0;
    for line in canonical.lines() {
        let (lhs, rhs) = line.split_once(" = ").unwrap();
        let x: QKElement = rhs.parse().unwrap();
        if format!("{lhs} = {x}") != line {
            bad_lines += 1;
        }
    }
    let whole = serialize(&parse_table(&canonical).unwrap()) == canonical;
    let l = |s: &str| s.parse::<ClassLabel>().unwrap();
    let first: QKElement = "O2".parse().unwrap();
    let last: QKElement = "q^2 O8''".parse().unwrap();
    let mixed: QKElement = "O12 + 2 O12' + q - 2 O13 - 2 q O1 + q O2".parse().unwrap();
    let terms: Vec<_> = mixed.terms().collect();
    let expected = vec![
        (0, l("O12"), 1),
        (0, l("O12'"), 2),
        (0, l("O13"), -2),
        (1, ClassLabel::UNIT, 1),
        (1, l("O1"), -2),
        (1, l("O2"), 1),
    ];
    let examples = first.terms().collect::<Vec<_>>() == vec![(0, l("O2"), 1)]
        && last.terms().collect::<Vec<_>>() == vec![(2, l("O8''"), 1)]
        && terms == expected;
    outcome(
        bad_lines == 0 && whole && examples && canonical.lines().count() == 351,
        format!(
            "{} lines, {bad_lines} round-trip failures, whole-table identity {whole}, grammar examples {examples}",
            canonical.lines().count()
        ),
    )
}

fn criterion_10(spaces: &[CominSpace]) -> Outcome {
    let mut bad = Vec::new();
    let mut pairs = 0usize;
    for x in spaces {
        let wp = &x.wp;
        let m = wp.len();
        let g1 = x.gamma1_table().unwrap();
        let mut ok = true;
        for a in 0..m {
            ok &= wp.leq(a, a);
            ok &= wp.leq(a, g1[a]);
            if a != wp.u_max {
                ok &= wp.reps[g1[a]].length() > wp.reps[a].length();
            }
            for b in 0..m {
                pairs += 1;
                if !wp.leq(a, b) {
                    continue;
                }
                ok &= wp.leq(g1[a], g1[b]);
                if a != b {
                    ok &= !wp.leq(b, a);
                }
                for c in 0..m {
                    if wp.leq(b, c) {
                        ok &= wp.leq(a, c);
                    }
                }
            }
        }
        if !ok {
            bad.push(x.family.to_string());
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} spaces, {pairs} pairs; failures {bad:?}", spaces.len()),
    )
}

fn main() -> ExitCode {
    let table = MultTable::shipped();
    let start = Instant::now();
    let spaces: Vec<CominSpace> = families().into_iter().map(|f| CominSpace::new(f).unwrap()).collect();
    let build = start.elapsed();
    let e6 = spaces.iter().find(|x| x.family == Family::E6P6).unwrap();
    let e7 = spaces.iter().find(|x| x.family == Family::E7P7).unwrap();

    let criteria: Vec<Criterion> = vec![
        ("associativity of the QK table", Box::new(|| criterion_1(&table, e6))),
        ("degree bound on the table", Box::new(|| criterion_2(&table, e6))),
        ("diameter matches d_X(2)", Box::new(|| criterion_3(&spaces, build))),
        ("three points on a curve of degree d_X(3)", Box::new(|| criterion_4(&spaces))),
        ("cancellation of high-degree terms", Box::new(criterion_5)),
        ("assembly routes agree", Box::new(criterion_6)),
        ("degree distance is word independent", Box::new(|| criterion_7(&spaces))),
        ("class labels link to W^P", Box::new(|| criterion_8(&table, e6, e7))),
        ("table parser round trip", Box::new(|| criterion_9(&table))),
        ("Bruhat order and gamma1 monotonicity", Box::new(|| criterion_10(&spaces))),
    ];

    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failures += 1;
        }
        println!(
            "criterion {:>2} {}: {name}: {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
