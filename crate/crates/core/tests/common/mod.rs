//! Oracles, generators and checks shared by the property suite and the
//! acceptance runner.
#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use kmodes_core::analysis::fitness_with;
use kmodes_core::categorical::{densities, mode_of};
use kmodes_core::engine::{initial_assignment, iterate};
use kmodes_core::init::{self, matching_game, matching_replace, InitMethod};
use kmodes_core::stable_matching::{check_valid, enumerate_stable, solve, HrInstance, Matching};
use kmodes_core::{AttributeSpace, Code, DataPoint, Dataset};

pub type Rows = Vec<Vec<Code>>;

// ---- oracles --------------------------------------------------------------

pub fn hamming(a: &[Code], b: &[Code]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub fn summed(rows: &[&[Code]], z: &[Code]) -> u64 {
    rows.iter().map(|r| hamming(r, z) as u64).sum()
}

/// Average density as one minus the mean dissimilarity to the dataset.
pub fn density_by_dissimilarity(ds: &Dataset, i: usize) -> f64 {
    let rows: Vec<&[Code]> = ds.rows().collect();
    1.0 - summed(&rows, ds.row(i)) as f64 / (ds.n_attributes() * ds.n_rows()) as f64
}

/// Every point of the space with the given attribute sizes.
pub fn all_points(sizes: &[usize]) -> Vec<Vec<Code>> {
    let mut out = vec![Vec::new()];
    for &d in sizes {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..d as Code).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

/// Smallest summed dissimilarity of any point of the space to `rows`.
pub fn exhaustive_min_cost(rows: &[&[Code]], sizes: &[usize]) -> u64 {
    all_points(sizes).iter().map(|z| summed(rows, z)).min().unwrap()
}

/// Cost of an assignment recomputed from scratch.
pub fn cost_from_scratch(ds: &Dataset, assignment: &[usize], modes: &[DataPoint]) -> u64 {
    (0..ds.n_rows())
        .map(|i| hamming(ds.row(i), &modes[assignment[i]]) as u64)
        .sum()
}

/// Blocking pairs found by checking every acceptable pair directly.
pub fn blocking_pairs(game: &HrInstance<usize, usize>, m: &Matching) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 0..game.n_residents() {
        for &h in game.resident_prefs(r) {
            let resident_wants = match m.hospital_of(r) {
                None => true,
                Some(cur) => pos(game.resident_prefs(r), h) < pos(game.resident_prefs(r), cur),
            };
            if !resident_wants || m.hospital_of(r) == Some(h) {
                continue;
            }
            let assigned = m.residents_of(h);
            let hospital_wants = assigned.len() < game.capacity(h)
                || assigned
                    .iter()
                    .any(|&s| pos(game.hospital_prefs(h), r) < pos(game.hospital_prefs(h), s));
            if hospital_wants {
                out.push((r, h));
            }
        }
    }
    out
}

fn pos(list: &[usize], x: usize) -> usize {
    list.iter().position(|&y| y == x).unwrap()
}

// ---- generators -----------------------------------------------------------

pub fn point(sizes: Vec<usize>) -> impl Strategy<Value = Vec<Code>> {
    sizes.into_iter().map(|d| 0..d as Code).collect::<Vec<_>>()
}

/// Three points of a common space with up to `max_m` attributes of up to
/// `max_d` categories.
pub fn triple(max_m: usize, max_d: usize) -> impl Strategy<Value = (Vec<Code>, Vec<Code>, Vec<Code>)> {
    prop::collection::vec(1..=max_d, 1..=max_m)
        .prop_flat_map(|sizes| (point(sizes.clone()), point(sizes.clone()), point(sizes)))
}

/// Attribute sizes and rows drawn from them.
pub fn rows(
    n: std::ops::RangeInclusive<usize>,
    max_m: usize,
    max_d: usize,
) -> impl Strategy<Value = (Vec<usize>, Rows)> {
    (prop::collection::vec(1..=max_d, 1..=max_m), n)
        .prop_flat_map(|(sizes, n)| (Just(sizes.clone()), prop::collection::vec(point(sizes), n)))
}

/// Rows and a `k` no larger than the number of distinct rows.
pub fn instance(
    n: std::ops::RangeInclusive<usize>,
    max_m: usize,
    max_d: usize,
    max_k: usize,
) -> impl Strategy<Value = (Rows, usize)> {
    rows(n, max_m, max_d).prop_flat_map(move |(_, rows)| {
        let distinct = Dataset::from_code_rows(&rows).unwrap().n_distinct_rows();
        (Just(rows), 1..=distinct.min(max_k))
    })
}

pub type GameParts = (Vec<(usize, Vec<usize>)>, Vec<(usize, usize, Vec<usize>)>);

/// Hospital-resident games with up to `max_r` residents and `max_h`
/// hospitals. Every resident ranks at least one hospital; each hospital
/// ranks exactly the residents that ranked it.
pub fn game(max_r: usize, max_h: usize) -> impl Strategy<Value = GameParts> {
    (1..=max_r, 1..=max_h).prop_flat_map(|(nr, nh)| {
        let resident_lists = prop::collection::vec(
            prop::sample::subsequence((0..nh).collect::<Vec<_>>(), 1..=nh).prop_shuffle(),
            nr,
        );
        let caps = prop::collection::vec(1..=3usize, nh);
        let keys = prop::collection::vec(any::<u32>(), nr * nh);
        (resident_lists, caps, keys).prop_map(move |(lists, caps, keys)| {
            let hospitals = (0..nh)
                .map(|h| {
                    let mut rankers: Vec<usize> = (0..nr).filter(|r| lists[*r].contains(&h)).collect();
                    rankers.sort_by_key(|&r| (keys[h * nr + r], r));
                    (h, caps[h], rankers)
                })
                .collect();
            let residents = lists.into_iter().enumerate().collect();
            (residents, hospitals)
        })
    })
}

// ---- checks, one per property ---------------------------------------------

pub fn check_metric_axioms(a: &[Code], b: &[Code], c: &[Code]) -> Result<(), TestCaseError> {
    let d = |x: &[Code], y: &[Code]| kmodes_core::categorical::dissimilarity(x, y).unwrap();
    prop_assert_eq!(d(a, a), 0);
    prop_assert_eq!(d(a, b), d(b, a));
    prop_assert_eq!(d(a, b) == 0, a == b);
    prop_assert!(d(a, c) <= d(a, b) + d(b, c));
    prop_assert_eq!(d(a, b), hamming(a, b));
    prop_assert!(d(a, b) <= a.len());
    Ok(())
}

pub fn check_density_forms(rows: &Rows) -> Result<(), TestCaseError> {
    let ds = Dataset::from_code_rows(rows).unwrap();
    for (i, dens) in densities(&ds).into_iter().enumerate() {
        let other = density_by_dissimilarity(&ds, i);
        prop_assert!((dens - other).abs() <= 1e-12, "row {}: {} vs {}", i, dens, other);
    }
    Ok(())
}

pub fn check_mode_minimises(sizes: &[usize], rows: &Rows) -> Result<(), TestCaseError> {
    let space = AttributeSpace::with_sizes(sizes).unwrap();
    let refs: Vec<&[Code]> = rows.iter().map(Vec::as_slice).collect();
    let mode = mode_of(refs.iter().copied(), &space, None).unwrap();
    prop_assert_eq!(summed(&refs, &mode), exhaustive_min_cost(&refs, sizes));
    // with an incumbent the result is still a minimiser
    let incumbent = &rows[0];
    let again = mode_of(refs.iter().copied(), &space, Some(incumbent)).unwrap();
    prop_assert_eq!(summed(&refs, &again), summed(&refs, &mode));
    Ok(())
}

pub fn check_kmodes_descent(rows: &Rows, k: usize, seed: u64) -> Result<(), TestCaseError> {
    let ds = Dataset::from_code_rows(rows).unwrap();
    let modes = init::initial_modes(&ds, k, &InitMethod::Random { seed }).unwrap();
    let mut c = initial_assignment(&ds, &modes).unwrap();
    c.check_integrity(ds.n_rows()).unwrap();
    let mut cost = c.cost();
    prop_assert_eq!(cost, cost_from_scratch(&ds, c.assignment(), &c.modes()));
    let mut passes = 0;
    loop {
        passes += 1;
        prop_assert!(passes <= 10_000, "no convergence");
        let moved = iterate(&ds, &mut c);
        prop_assert!(c.check_integrity(ds.n_rows()).is_ok());
        let next = c.cost();
        prop_assert_eq!(next, cost_from_scratch(&ds, c.assignment(), &c.modes()));
        prop_assert!(next <= cost, "cost rose from {} to {}", cost, next);
        cost = next;
        if moved == 0 {
            break;
        }
    }
    let fit = kmodes_core::engine::fit(&ds, &modes, 10_000).unwrap();
    prop_assert!(fit.converged);
    prop_assert!(fit.cost_trace.windows(2).all(|w| w[1] <= w[0]));
    prop_assert_eq!(fit.final_cost, cost);
    Ok(())
}

pub fn check_hr_solver(parts: &GameParts) -> Result<(), TestCaseError> {
    let game = HrInstance::new(parts.0.clone(), parts.1.clone()).unwrap();
    let m = solve(&game);
    prop_assert!(check_valid(&game, &m).is_ok());
    prop_assert!(
        blocking_pairs(&game, &m).is_empty(),
        "blocked by {:?}",
        blocking_pairs(&game, &m)
    );
    let all = enumerate_stable(&game).unwrap();
    prop_assert!(all.contains(&m));
    let rank = |m: &Matching, r: usize| {
        m.hospital_of(r)
            .map_or(usize::MAX, |h| game.resident_rank(r, h).unwrap())
    };
    for other in &all {
        prop_assert!(blocking_pairs(&game, other).is_empty());
        for r in 0..game.n_residents() {
            prop_assert!(rank(&m, r) <= rank(other, r), "resident {} does better elsewhere", r);
        }
    }
    Ok(())
}

pub fn check_matching_init(rows: &Rows, potential: &[Vec<Code>], perm: &[usize]) -> Result<(), TestCaseError> {
    let ds = Dataset::from_code_rows(rows).unwrap();
    let potential: Vec<DataPoint> = potential.iter().map(|p| DataPoint::new(p.clone())).collect();
    let k = potential.len();

    let game = matching_game(&ds, &potential).unwrap();
    let m = solve(&game);
    prop_assert_eq!(m.n_matched(), k);
    prop_assert!(blocking_pairs(&game, &m).is_empty());

    let modes = matching_replace(&ds, &potential).unwrap();
    let mut sorted = modes.clone();
    sorted.sort();
    sorted.dedup();
    prop_assert_eq!(sorted.len(), k);
    prop_assert!(modes.iter().all(|z| ds.contains(z)));

    let shuffled: Vec<DataPoint> = perm.iter().map(|&i| potential[i].clone()).collect();
    let modes2 = matching_replace(&ds, &shuffled).unwrap();
    let pairs = |ps: &[DataPoint], ms: &[DataPoint]| {
        let mut v: Vec<(DataPoint, DataPoint)> = ps.iter().cloned().zip(ms.iter().cloned()).collect();
        v.sort();
        v
    };
    prop_assert_eq!(pairs(&potential, &modes), pairs(&shuffled, &modes2));
    Ok(())
}

pub fn check_fitness(rows: &Rows, reps: usize, seed: u64) -> Result<i64, TestCaseError> {
    let ds = Dataset::from_code_rows(rows).unwrap();
    let f = fitness_with(&ds, 3, reps, seed, 100).unwrap();
    prop_assert_eq!(f.fitness, f.c_cao as i64 - f.c_match as i64);
    let cao = init::run(&ds, 3, &InitMethod::Cao, 100).unwrap().final_cost;
    let best = (0..reps as u64)
        .map(|r| {
            init::run(&ds, 3, &InitMethod::Matching { seed: seed + r }, 100)
                .unwrap()
                .final_cost
        })
        .min()
        .unwrap();
    prop_assert_eq!(f.c_cao, cao);
    prop_assert_eq!(f.c_match, best);
    Ok(f.fitness)
}

/// A dense dataset: one row pattern repeated, plus a few rows that each
/// perturb it in up to two attributes.
pub fn dense_rows() -> impl Strategy<Value = Rows> {
    (3..=6usize, 12..=30usize)
        .prop_flat_map(|(m, copies)| {
            let base = prop::collection::vec(0..3 as Code, m);
            let noise = prop::collection::vec((0..m, 0..4 as Code, 0..m, 0..4 as Code), 4..=8);
            (base, noise).prop_map(move |(base, noise)| {
                let mut rows = vec![base.clone(); copies];
                for (a, x, b, y) in noise {
                    let mut r = base.clone();
                    r[a] = x;
                    r[b] = y;
                    rows.push(r);
                }
                rows
            })
        })
        .prop_filter("k = 3 needs three distinct rows", |rows| {
            Dataset::from_code_rows(rows).unwrap().n_distinct_rows() >= 3
        })
}

/// Rows, `k` potential modes from their space and a permutation of `0..k`.
pub fn matching_case() -> impl Strategy<Value = (Rows, Vec<Vec<Code>>, Vec<usize>)> {
    rows(4..=30, 4, 3).prop_flat_map(|(_, rows)| {
        let ds = Dataset::from_code_rows(&rows).unwrap();
        let sizes = ds.space().sizes();
        let distinct = ds.n_distinct_rows();
        (1..=distinct.min(5)).prop_flat_map(move |k| {
            let potential = prop::collection::vec(point(sizes.clone()), k);
            let perm = Just((0..k).collect::<Vec<_>>()).prop_shuffle();
            (Just(rows.clone()), potential, perm)
        })
    })
}

pub fn tally<T: Ord>(items: impl IntoIterator<Item = T>) -> BTreeMap<T, usize> {
    let mut out = BTreeMap::new();
    for x in items {
        *out.entry(x).or_insert(0) += 1;
    }
    out
}
