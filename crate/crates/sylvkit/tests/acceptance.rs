//! Acceptance criteria 1 to 12. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sylvkit::parallel;
use sylvkit_core::bst::{p_baxt, p_sylv, p_sylvh, Traversal};
use sylvkit_core::congruence::{
    defining_relations, equal, equal_via_precedences, left_precedences, right_precedences,
    MonoidTag, PrecedenceTable,
};
use sylvkit_core::deduce::{basis_for, derive, verify_derivation};
use sylvkit_core::embed::verify_embedding;
use sylvkit_core::evalsearch::{
    enumerate_identities, equivalent, rank_two_words, refute, refute_with_family,
};
use sylvkit_core::idcheck::{check_first_occurrence, check_id, check_id_pairwise};
use sylvkit_core::word::{all_words, Identity, LetterWord, VarWord, Variable};

type Outcome = Result<String, String>;

fn id(s: &str) -> Identity {
    s.parse().unwrap()
}

fn w(s: &str) -> LetterWord {
    s.parse().unwrap()
}

/// Fastest of `reps` runs.
fn fastest<T>(reps: usize, mut f: impl FnMut() -> T) -> (T, Duration) {
    let mut best = Duration::MAX;
    let mut last = None;
    for _ in 0..reps {
        let t = Instant::now();
        let v = f();
        best = best.min(t.elapsed());
        last = Some(v);
    }
    (last.unwrap(), best)
}

fn within(limit: Duration, took: Duration, what: String) -> Outcome {
    if took < limit {
        Ok(format!("{what} ({took:.2?} < {limit:?})"))
    } else {
        Err(format!("{what} but took {took:.2?}, limit {limit:?}"))
    }
}

fn c1_tree_round_trips() -> Outcome {
    let (ok, took) = fastest(20, || {
        p_sylv(&w("1142557654")).reading(Traversal::Postfix) == w("1142557654")
            && p_sylvh(&w("5411245765")).reading(Traversal::Prefix) == w("5411245765")
    });
    if !ok {
        return Err("readings differ from the inserted words".into());
    }
    within(Duration::from_millis(1), took, "both sample trees read back exactly".into())
}

fn table(t: &PrecedenceTable) -> Vec<(u32, u32, usize)> {
    t.iter().map(|p| (p.lower.get(), p.upper.get(), p.index)).collect()
}

/// A word and its precedences as (lower, upper, index).
type Table = (&'static str, &'static [(u32, u32, usize)]);

fn c2_precedences() -> Outcome {
    let right: [Table; 3] = [
        ("3123", &[(1, 2, 1), (2, 3, 1)]),
        ("2313", &[(1, 3, 1), (2, 3, 2)]),
        ("3132", &[(1, 2, 1)]),
    ];
    let left: [Table; 3] = [
        ("1231", &[(1, 2, 1), (2, 3, 1)]),
        ("1312", &[(1, 2, 2), (1, 3, 1)]),
        ("3121", &[(1, 2, 1)]),
    ];
    let (bad, took) = fastest(20, || {
        let mut bad = Vec::new();
        for (word, want) in right {
            if table(&right_precedences(&w(word))) != want {
                bad.push(format!("right {word}"));
            }
        }
        for (word, want) in left {
            if table(&left_precedences(&w(word))) != want {
                bad.push(format!("left {word}"));
            }
        }
        bad
    });
    if !bad.is_empty() {
        return Err(format!("mismatched tables: {}", bad.join(", ")));
    }
    within(Duration::from_millis(1), took, "six tables match".into())
}

fn c3_characterization() -> Outcome {
    let words = all_words(3, 5);
    let start = Instant::now();
    let mut mismatches = 0usize;
    for tag in MonoidTag::ALL {
        mismatches += words
            .par_iter()
            .map(|u| words.iter().filter(|v| equal(tag, u, v) != equal_via_precedences(tag, u, v)).count())
            .sum::<usize>();
    }
    let took = start.elapsed();
    let pairs = words.len() * words.len();
    if mismatches > 0 {
        return Err(format!("{mismatches} mismatches"));
    }
    within(
        Duration::from_secs(60),
        took,
        format!("{} words, {pairs} ordered pairs per monoid, 0 mismatches", words.len()),
    )
}

fn c4_twins() -> Outcome {
    let words = all_words(3, 6);
    let start = Instant::now();
    let failures = words.par_iter().filter(|w| !p_baxt(w).is_twin()).count();
    let took = start.elapsed();
    if failures > 0 {
        return Err(format!("{failures} words without twin pairs"));
    }
    within(Duration::from_secs(60), took, format!("{} words, 0 failures", words.len()))
}

fn c5_relations() -> Outcome {
    let mut total = 0;
    for tag in MonoidTag::ALL {
        let inner = if tag == MonoidTag::Baxt { 1 } else { 2 };
        let rel = defining_relations(tag, 4, inner);
        total += rel.len();
        if let Some((l, r)) = rel.iter().find(|(l, r)| !equal(tag, l, r)) {
            return Err(format!("{tag}: {l} and {r} differ"));
        }
    }
    Ok(format!("{total} relation instances over rank 4, 0 failures"))
}

fn c6_identity_table() -> Outcome {
    const L: &str = "xyzxty = yxzxty";
    const M: &str = "xzxytx = xzyxtx";
    const R: &str = "xzytxy = xzytyx";
    const O: &str = "xzytxyrxsy = xzytyxrxsy";
    const E: &str = "xzytxyrysx = xzytyxrysx";
    let table = [
        (MonoidTag::Sylv, L, true),
        (MonoidTag::Sylv, M, false),
        (MonoidTag::Sylv, R, false),
        (MonoidTag::Sylv, "xyxy = yxxy", true),
        (MonoidTag::Sylvh, R, true),
        (MonoidTag::Sylvh, L, false),
        (MonoidTag::Sylvh, M, false),
        (MonoidTag::Sylvh, "yxyx = yxxy", true),
        (MonoidTag::Baxt, O, true),
        (MonoidTag::Baxt, E, true),
        (MonoidTag::Baxt, "yxxyxy = yxyxxy", true),
        (MonoidTag::Baxt, "xyxyxy = xyyxxy", true),
    ];
    let wrong: Vec<String> = table
        .iter()
        .filter(|(tag, s, sat)| check_id(*tag, &id(s)).is_satisfied() != *sat)
        .map(|(tag, s, _)| format!("{tag} {s}"))
        .collect();
    if wrong.is_empty() {
        Ok(format!("{} verdicts match", table.len()))
    } else {
        Err(format!("wrong verdicts: {}", wrong.join("; ")))
    }
}

fn c7_shortest() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let two = [
        (MonoidTag::Sylv, 4, vec![id("xyxy = yxxy")]),
        (MonoidTag::Sylvh, 4, vec![id("yxyx = yxxy")]),
        (MonoidTag::Baxt, 6, vec![id("yxxyxy = yxyxxy"), id("xyxyxy = xyyxxy")]),
    ];
    for (tag, len, classes) in two {
        let r = parallel::shortest_identities(tag, 2, 6, u128::MAX).map_err(|e| e.to_string())?;
        if r.minimal_length != Some(len) {
            return Err(format!("{tag}, 2 variables: minimal length {:?}", r.minimal_length));
        }
        let same = r.identities.len() == classes.len()
            && classes.iter().all(|c| r.identities.iter().any(|i| equivalent(i, c)));
        if !same {
            return Err(format!("{tag}, 2 variables: classes {:?}", r.identities));
        }
        notes.push(format!("{tag}(2)={len}"));
    }
    for (tag, len) in [(MonoidTag::Sylv, 5), (MonoidTag::Sylvh, 5), (MonoidTag::Baxt, 7)] {
        let r = parallel::shortest_identities(tag, 3, len, u128::MAX).map_err(|e| e.to_string())?;
        if r.minimal_length != Some(len) {
            return Err(format!("{tag}, 3 variables: minimal length {:?}", r.minimal_length));
        }
        notes.push(format!("{tag}(3)={len}"));
    }
    within(Duration::from_secs(600), start.elapsed(), notes.join(", "))
}

fn var_words(n: usize, max_len: usize) -> Vec<VarWord> {
    let mut out = vec![VarWord::empty()];
    let mut layer = vec![VarWord::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for k in 0..n {
                let mut v = w.as_slice().to_vec();
                v.push(Variable::from_index(k).unwrap());
                next.push(VarWord::from(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn agree(i: &Identity) -> bool {
    MonoidTag::ALL.iter().all(|&tag| {
        let a = check_id(tag, i).is_satisfied();
        a == check_id_pairwise(tag, i).is_satisfied() && a == check_first_occurrence(tag, i).is_satisfied()
    })
}

fn random_identity(rng: &mut ChaCha8Rng, n_vars: usize, len: usize, balanced: bool) -> Identity {
    let side = |rng: &mut ChaCha8Rng| -> Vec<Variable> {
        (0..len).map(|_| Variable::from_index(rng.random_range(0..n_vars)).unwrap()).collect()
    };
    let lhs = side(rng);
    let rhs = if balanced {
        let mut r = lhs.clone();
        // Mostly small perturbations, so that a fair share holds.
        if rng.random_bool(0.5) {
            r.shuffle(rng);
        } else {
            for _ in 0..rng.random_range(1..=3) {
                let p = rng.random_range(0..len.max(2) - 1).min(len.saturating_sub(2));
                if len >= 2 {
                    r.swap(p, p + 1);
                }
            }
        }
        r
    } else {
        side(rng)
    };
    Identity::new(lhs.into(), rhs.into())
}

fn c8_checker_agreement() -> Outcome {
    let words = var_words(3, 6);
    let disagreements: usize = words
        .par_iter()
        .map(|u| words.iter().filter(|v| !agree(&Identity::new((*u).clone(), (*v).clone()))).count())
        .sum();
    let exhaustive = words.len() * words.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let sample: Vec<Identity> = (0..100_000)
        .map(|k| {
            let len = rng.random_range(0..=200);
            let n = rng.random_range(1..=26);
            random_identity(&mut rng, n, len, k % 10 != 0)
        })
        .collect();
    let random_bad = sample.par_iter().filter(|i| !agree(i)).count();
    let random_sat = sample.iter().filter(|i| check_id(MonoidTag::Sylv, i).is_satisfied()).count();
    if disagreements + random_bad > 0 {
        return Err(format!("{disagreements} exhaustive and {random_bad} random disagreements"));
    }
    Ok(format!(
        "{exhaustive} exhaustive pairs and 100000 random identities ({random_sat} sylv-satisfied), 0 disagreements"
    ))
}

fn c9_oracle() -> Outcome {
    let start = Instant::now();
    let family = rank_two_words(2);
    let mut rejected = 0usize;
    let mut accepted = 0usize;
    for n in 1..=4 {
        let ids: Vec<Identity> = enumerate_identities(n, 8).collect();
        for tag in MonoidTag::ALL {
            let bad: Vec<(bool, &Identity)> = ids
                .par_iter()
                .filter_map(|i| {
                    let sat = check_id(tag, i).is_satisfied();
                    let ok = if sat {
                        refute_with_family(i, tag, &family).is_none()
                    } else {
                        refute(i, tag).is_some()
                    };
                    (!ok).then_some((sat, i))
                })
                .collect();
            if let Some((sat, i)) = bad.first() {
                return Err(format!("{tag}: {i} (checker says {sat})"));
            }
            let sat = ids.par_iter().filter(|i| check_id(tag, i).is_satisfied()).count();
            accepted += sat;
            rejected += ids.len() - sat;
        }
    }
    within(
        Duration::from_secs(600),
        start.elapsed(),
        format!("{rejected} rejected all refuted, {accepted} accepted all survive (classes up to renaming and swapping sides)"),
    )
}

fn c10_embedding() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for (n, len) in [(2, 4), (3, 4)] {
        for tag in MonoidTag::ALL {
            let r = verify_embedding(n, len, tag).map_err(|e| e.to_string())?;
            if let Some(v) = r.violation {
                return Err(format!("{tag} rank {n}: {v}"));
            }
            pairs += r.pairs_checked;
        }
    }
    within(Duration::from_secs(300), start.elapsed(), format!("{pairs} pairs, 0 violations"))
}

fn c11_derivations() -> Outcome {
    let start = Instant::now();
    let mut derived = 0usize;
    let mut steps = 0usize;
    for (tag, max_len, budget) in [
        (MonoidTag::Sylv, 6, 64),
        (MonoidTag::Sylvh, 6, 64),
        (MonoidTag::Baxt, 7, 256),
    ] {
        let words = var_words(3, max_len);
        // Every ordered pair of words accepted by the checker.
        let accepted: Vec<Identity> = words
            .par_iter()
            .flat_map_iter(|u| {
                words
                    .iter()
                    .filter(move |v| v.len() == u.len() && v.content() == u.content())
                    .map(move |v| Identity::new(u.clone(), v.clone()))
            })
            .filter(|i| check_id(tag, i).is_satisfied())
            .collect();
        let results: Vec<Result<usize, String>> = accepted
            .par_iter()
            .map(|i| {
                let d = derive(tag, i, budget).map_err(|e| format!("{tag} {i}: {e}"))?;
                if !verify_derivation(tag, i, &d) || !d.steps.iter().all(|s| basis_for(tag).contains(&s.basis)) {
                    return Err(format!("{tag} {i}: derivation rejected"));
                }
                for pair in d.words().unwrap().windows(2) {
                    let step = Identity::new(pair[0].clone(), pair[1].clone());
                    if !check_id(tag, &step).is_satisfied() {
                        return Err(format!("{tag} {i}: unsound step {step}"));
                    }
                }
                Ok(d.len())
            })
            .collect();
        for r in results {
            steps += r?;
            derived += 1;
        }
    }
    within(
        Duration::from_secs(600),
        start.elapsed(),
        format!("{derived} accepted identities derived and verified, {steps} sound steps"),
    )
}

fn long_identity(rng: &mut ChaCha8Rng, k: usize) -> (Identity, Identity) {
    let u: Vec<Variable> = (0..k).map(|_| Variable::from_index(rng.random_range(0..26)).unwrap()).collect();
    let mut v = u.clone();
    v.shuffle(rng);
    (
        Identity::new(u.clone().into(), v.into()),
        Identity::new(u.clone().into(), u.into()),
    )
}

fn c12_performance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst = Duration::ZERO;
    for _ in 0..20 {
        let (random, same) = long_identity(&mut rng, 10_000);
        for i in [&random, &same] {
            for tag in MonoidTag::ALL {
                let t = Instant::now();
                std::hint::black_box(check_id(tag, i));
                worst = worst.max(t.elapsed());
            }
        }
    }
    if worst >= Duration::from_secs(1) {
        return Err(format!("slowest check took {worst:.2?}"));
    }
    // Full scans (u ≈ u) at k and 2k.
    let time = |k: usize, rng: &mut ChaCha8Rng| {
        let (_, same) = long_identity(rng, k);
        fastest(31, || check_id(MonoidTag::Baxt, std::hint::black_box(&same))).1
    };
    let small = time(10_000, &mut rng);
    let large = time(20_000, &mut rng);
    let ratio = large.as_secs_f64() / small.as_secs_f64().max(1e-9);
    if ratio > 6.0 {
        return Err(format!("doubling k multiplied time by {ratio:.2}, allowed 6"));
    }
    Ok(format!(
        "slowest check at k=10^4 {worst:.2?}; full scan {small:.2?} → {large:.2?} on doubling (×{ratio:.2})"
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("tree round-trips", c1_tree_round_trips),
        ("precedence examples", c2_precedences),
        ("characterization equivalence", c3_characterization),
        ("twin property", c4_twins),
        ("defining relations", c5_relations),
        ("identity table", c6_identity_table),
        ("shortest-identity laws", c7_shortest),
        ("checker agreement", c8_checker_agreement),
        ("oracle completeness", c9_oracle),
        ("embedding verification", c10_embedding),
        ("basis completeness", c11_derivations),
        ("check-id performance", c12_performance),
    ];
    let only: BTreeSet<usize> = std::env::args().filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let n = k + 1;
        if !only.is_empty() && !only.contains(&n) {
            continue;
        }
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {n:>2} PASS {name}: {msg} [{secs:.1}s]"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n:>2} FAIL {name}: {msg} [{secs:.1}s]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
