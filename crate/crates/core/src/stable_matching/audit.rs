use super::instance::{HrInstance, Matching};
use crate::error::{Error, Result};

/// Largest `|R| * |H|` accepted by [`enumerate_stable`].
pub const ENUMERATION_LIMIT: usize = 25;

/// Checks that every match is mutually acceptable, that the two maps agree,
/// and that no hospital is over-subscribed.
pub fn check_valid<R, H>(game: &HrInstance<R, H>, matching: &Matching) -> Result<()> {
    let invalid = |msg: String| Err(Error::InvalidMatching(msg));
    if matching.n_residents() != game.n_residents() || matching.n_hospitals() != game.n_hospitals() {
        return invalid("matching and game have different numbers of players".into());
    }
    for r in 0..game.n_residents() {
        if let Some(h) = matching.hospital_of(r) {
            if game.resident_rank(r, h).is_none() {
                return invalid(format!("resident {r} is matched to unranked hospital {h}"));
            }
            if !matching.residents_of(h).contains(&r) {
                return invalid(format!("resident {r} is missing from hospital {h}"));
            }
        }
    }
    for h in 0..game.n_hospitals() {
        let assigned = matching.residents_of(h);
        if assigned.len() > game.capacity(h) {
            return invalid(format!("hospital {h} is over-subscribed"));
        }
        for &r in assigned {
            if game.hospital_rank(h, r).is_none() {
                return invalid(format!("hospital {h} holds unranked resident {r}"));
            }
            if matching.hospital_of(r) != Some(h) {
                return invalid(format!("hospital {h} holds resident {r} matched elsewhere"));
            }
        }
    }
    Ok(())
}

/// Every blocking pair `(resident, hospital)` of a valid matching; empty
/// exactly when the matching is stable.
pub fn is_stable<R, H>(game: &HrInstance<R, H>, matching: &Matching) -> Result<Vec<(usize, usize)>> {
    check_valid(game, matching)?;
    let mut blocking = Vec::new();
    for r in 0..game.n_residents() {
        let current = matching.hospital_of(r).and_then(|h| game.resident_rank(r, h));
        for (rank, &h) in game.resident_prefs(r).iter().enumerate() {
            // h is in f(r), so r is in g(h): mutual preference holds
            let resident_wants = current.is_none_or(|c| rank < c);
            if !resident_wants {
                continue;
            }
            let held = matching.residents_of(h);
            let hospital_wants = held.len() < game.capacity(h) || {
                let rr = game.hospital_rank(h, r);
                held.iter().any(|&other| rr < game.hospital_rank(h, other))
            };
            if hospital_wants {
                blocking.push((r, h));
            }
        }
    }
    Ok(blocking)
}

/// All stable matchings of a small game, by exhaustive search.
pub fn enumerate_stable<R, H>(game: &HrInstance<R, H>) -> Result<Vec<Matching>> {
    let (nr, nh) = (game.n_residents(), game.n_hospitals());
    if nr * nh > ENUMERATION_LIMIT {
        return Err(Error::EnumerationTooLarge {
            residents: nr,
            hospitals: nh,
        });
    }
    let mut found = Vec::new();
    let mut current = Matching::empty(nr, nh);
    extend(game, 0, &mut current, &mut found)?;
    Ok(found)
}

fn extend<R, H>(game: &HrInstance<R, H>, r: usize, current: &mut Matching, found: &mut Vec<Matching>) -> Result<()> {
    if r == game.n_residents() {
        if is_stable(game, current)?.is_empty() {
            found.push(current.clone());
        }
        return Ok(());
    }
    extend(game, r + 1, current, found)?;
    for &h in game.resident_prefs(r) {
        if current.residents_of(h).len() < game.capacity(h) {
            current.assign(r, h);
            extend(game, r + 1, current, found)?;
            current.unassign(r);
        }
    }
    Ok(())
}
