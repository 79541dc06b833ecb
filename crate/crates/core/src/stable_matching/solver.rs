use std::collections::BTreeSet;

use super::instance::{HrInstance, Matching};

/// Working copies of the preference lists, with pairs struck out as the
/// algorithm deletes them.
struct Lists {
    resident_alive: Vec<Vec<bool>>,
    hospital_alive: Vec<Vec<bool>>,
    /// First position in `f(r)` that may still be alive.
    head: Vec<usize>,
}

impl Lists {
    fn new<R, H>(game: &HrInstance<R, H>) -> Self {
        Self {
            resident_alive: (0..game.n_residents())
                .map(|r| vec![true; game.resident_prefs(r).len()])
                .collect(),
            hospital_alive: (0..game.n_hospitals())
                .map(|h| vec![true; game.hospital_prefs(h).len()])
                .collect(),
            head: vec![0; game.n_residents()],
        }
    }

    fn favourite<R, H>(&mut self, game: &HrInstance<R, H>, r: usize) -> Option<usize> {
        let alive = &self.resident_alive[r];
        while self.head[r] < alive.len() && !alive[self.head[r]] {
            self.head[r] += 1;
        }
        game.resident_prefs(r).get(self.head[r]).copied()
    }

    fn delete_pair<R, H>(&mut self, game: &HrInstance<R, H>, r: usize, h: usize) {
        if let Some(pos) = game.resident_rank(r, h) {
            self.resident_alive[r][pos] = false;
        }
        if let Some(pos) = game.hospital_rank(h, r) {
            self.hospital_alive[h][pos] = false;
        }
    }
}

fn worst_match<R, H>(game: &HrInstance<R, H>, matching: &Matching, h: usize) -> Option<usize> {
    matching
        .residents_of(h)
        .iter()
        .copied()
        .max_by_key(|&r| game.hospital_rank(h, r))
}

/// Resident-optimal stable matching by resident-proposing deferred
/// acceptance.
///
/// Free residents propose to their favourite remaining hospital, lowest
/// index first. A hospital over capacity rejects its worst match, and a full
/// hospital strikes every resident it ranks below its worst match from its
/// list (and itself from theirs). The caller's game is not modified.
pub fn solve<R, H>(game: &HrInstance<R, H>) -> Matching {
    let mut matching = Matching::empty(game.n_residents(), game.n_hospitals());
    let mut lists = Lists::new(game);
    let mut free: BTreeSet<usize> = (0..game.n_residents()).collect();

    while let Some(r) = free.pop_first() {
        let Some(h) = lists.favourite(game, r) else {
            // exhausted list: stays unmatched
            continue;
        };
        matching.assign(r, h);

        if matching.residents_of(h).len() > game.capacity(h) {
            let worst = worst_match(game, &matching, h).expect("hospital has matches");
            matching.unassign(worst);
            free.insert(worst);
        }
        if matching.residents_of(h).len() == game.capacity(h) {
            let worst = worst_match(game, &matching, h).expect("hospital has matches");
            let from = game.hospital_rank(h, worst).expect("matched resident is ranked") + 1;
            let successors: Vec<usize> = game.hospital_prefs(h)[from..]
                .iter()
                .enumerate()
                .filter(|(offset, _)| lists.hospital_alive[h][from + offset])
                .map(|(_, &s)| s)
                .collect();
            for s in successors {
                lists.delete_pair(game, s, h);
            }
        }
        debug_assert!(matching.residents_of(h).len() <= game.capacity(h));
    }
    matching
}
