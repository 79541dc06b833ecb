use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};

/// A hospital-resident game.
///
/// Players are referred to by position (`0..n_residents()`,
/// `0..n_hospitals()`) once the game is built; the caller's ids are kept for
/// lookups. Each hospital ranks exactly the residents that ranked it, and
/// hospitals nobody ranked are dropped at construction.
#[derive(Clone, Debug)]
pub struct HrInstance<R, H> {
    residents: Vec<R>,
    hospitals: Vec<H>,
    capacities: Vec<usize>,
    resident_prefs: Vec<Vec<usize>>,
    hospital_prefs: Vec<Vec<usize>>,
    resident_rank: Vec<HashMap<usize, usize>>,
    hospital_rank: Vec<HashMap<usize, usize>>,
}

impl<R, H> HrInstance<R, H>
where
    R: Clone + Eq + Hash + Debug,
    H: Clone + Eq + Hash + Debug,
{
    /// `residents` pairs each resident with its preference list, best first.
    /// `hospitals` gives each hospital's capacity and preference list.
    pub fn new(residents: Vec<(R, Vec<H>)>, hospitals: Vec<(H, usize, Vec<R>)>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidInstance(msg));

        let mut resident_index: HashMap<R, usize> = HashMap::with_capacity(residents.len());
        for (i, (r, _)) in residents.iter().enumerate() {
            if resident_index.insert(r.clone(), i).is_some() {
                return invalid(format!("resident {r:?} appears twice"));
            }
        }
        let mut all_hospitals: HashMap<H, usize> = HashMap::with_capacity(hospitals.len());
        for (i, (h, cap, _)) in hospitals.iter().enumerate() {
            if *cap == 0 {
                return invalid(format!("hospital {h:?} has zero capacity"));
            }
            if all_hospitals.insert(h.clone(), i).is_some() {
                return invalid(format!("hospital {h:?} appears twice"));
            }
        }

        // who ranked each hospital
        let mut rankers: Vec<HashSet<usize>> = vec![HashSet::new(); hospitals.len()];
        for (ri, (r, prefs)) in residents.iter().enumerate() {
            if prefs.is_empty() {
                return invalid(format!("resident {r:?} ranks no hospital"));
            }
            let mut seen = HashSet::with_capacity(prefs.len());
            for h in prefs {
                let Some(&hi) = all_hospitals.get(h) else {
                    return invalid(format!("resident {r:?} ranks unknown hospital {h:?}"));
                };
                if !seen.insert(hi) {
                    return invalid(format!("resident {r:?} ranks {h:?} twice"));
                }
                rankers[hi].insert(ri);
            }
        }

        let mut kept: Vec<usize> = Vec::with_capacity(hospitals.len());
        for (hi, (h, _, prefs)) in hospitals.iter().enumerate() {
            if rankers[hi].is_empty() {
                if !prefs.is_empty() {
                    return invalid(format!("hospital {h:?} ranks residents that did not rank it"));
                }
                continue;
            }
            let mut listed = HashSet::with_capacity(prefs.len());
            for r in prefs {
                match resident_index.get(r) {
                    Some(&ri) if rankers[hi].contains(&ri) => {
                        if !listed.insert(ri) {
                            return invalid(format!("hospital {h:?} ranks {r:?} twice"));
                        }
                    }
                    _ => return invalid(format!("hospital {h:?} ranks {r:?}, who did not rank it")),
                }
            }
            if listed.len() != rankers[hi].len() {
                return invalid(format!("hospital {h:?} does not rank every resident that ranked it"));
            }
            kept.push(hi);
        }
        let new_index: HashMap<usize, usize> = kept.iter().enumerate().map(|(new, &old)| (old, new)).collect();

        let resident_prefs: Vec<Vec<usize>> = residents
            .iter()
            .map(|(_, prefs)| prefs.iter().map(|h| new_index[&all_hospitals[h]]).collect())
            .collect();
        let hospital_prefs: Vec<Vec<usize>> = kept
            .iter()
            .map(|&hi| hospitals[hi].2.iter().map(|r| resident_index[r]).collect())
            .collect();
        let rank = |lists: &Vec<Vec<usize>>| -> Vec<HashMap<usize, usize>> {
            lists
                .iter()
                .map(|l| l.iter().enumerate().map(|(pos, &x)| (x, pos)).collect())
                .collect()
        };
        Ok(Self {
            resident_rank: rank(&resident_prefs),
            hospital_rank: rank(&hospital_prefs),
            residents: residents.into_iter().map(|(r, _)| r).collect(),
            capacities: kept.iter().map(|&hi| hospitals[hi].1).collect(),
            hospitals: kept.iter().map(|&hi| hospitals[hi].0.clone()).collect(),
            resident_prefs,
            hospital_prefs,
        })
    }

    pub fn resident_index(&self, r: &R) -> Option<usize> {
        self.residents.iter().position(|x| x == r)
    }

    pub fn hospital_index(&self, h: &H) -> Option<usize> {
        self.hospitals.iter().position(|x| x == h)
    }
}

impl<R, H> HrInstance<R, H> {
    pub fn n_residents(&self) -> usize {
        self.residents.len()
    }

    pub fn n_hospitals(&self) -> usize {
        self.hospitals.len()
    }

    pub fn resident(&self, r: usize) -> &R {
        &self.residents[r]
    }

    pub fn hospital(&self, h: usize) -> &H {
        &self.hospitals[h]
    }

    pub fn capacity(&self, h: usize) -> usize {
        self.capacities[h]
    }

    /// `f(r)`, best first.
    pub fn resident_prefs(&self, r: usize) -> &[usize] {
        &self.resident_prefs[r]
    }

    /// `g(h)`, best first.
    pub fn hospital_prefs(&self, h: usize) -> &[usize] {
        &self.hospital_prefs[h]
    }

    /// Position of `h` in `f(r)`, if ranked.
    pub fn resident_rank(&self, r: usize, h: usize) -> Option<usize> {
        self.resident_rank[r].get(&h).copied()
    }

    /// Position of `r` in `g(h)`, if ranked.
    pub fn hospital_rank(&self, h: usize, r: usize) -> Option<usize> {
        self.hospital_rank[h].get(&r).copied()
    }
}

/// A (partial) assignment of residents to hospitals, by position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    resident_to_hospital: Vec<Option<usize>>,
    hospital_to_residents: Vec<BTreeSet<usize>>,
}

impl Matching {
    pub fn empty(n_residents: usize, n_hospitals: usize) -> Self {
        Self {
            resident_to_hospital: vec![None; n_residents],
            hospital_to_residents: vec![BTreeSet::new(); n_hospitals],
        }
    }

    /// Builds a matching from `(resident, hospital)` pairs.
    pub fn from_pairs(n_residents: usize, n_hospitals: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut m = Self::empty(n_residents, n_hospitals);
        for &(r, h) in pairs {
            if r >= n_residents || h >= n_hospitals {
                return Err(Error::InvalidMatching(format!("pair ({r}, {h}) is out of range")));
            }
            if m.resident_to_hospital[r].is_some() {
                return Err(Error::InvalidMatching(format!("resident {r} is matched twice")));
            }
            m.assign(r, h);
        }
        Ok(m)
    }

    pub fn hospital_of(&self, r: usize) -> Option<usize> {
        self.resident_to_hospital[r]
    }

    pub fn residents_of(&self, h: usize) -> &BTreeSet<usize> {
        &self.hospital_to_residents[h]
    }

    pub fn n_residents(&self) -> usize {
        self.resident_to_hospital.len()
    }

    pub fn n_hospitals(&self) -> usize {
        self.hospital_to_residents.len()
    }

    /// Matched `(resident, hospital)` pairs in resident order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.resident_to_hospital
            .iter()
            .enumerate()
            .filter_map(|(r, h)| h.map(|h| (r, h)))
            .collect()
    }

    pub fn n_matched(&self) -> usize {
        self.resident_to_hospital.iter().filter(|h| h.is_some()).count()
    }

    pub(crate) fn assign(&mut self, r: usize, h: usize) {
        debug_assert!(self.resident_to_hospital[r].is_none());
        self.resident_to_hospital[r] = Some(h);
        self.hospital_to_residents[h].insert(r);
    }

    pub(crate) fn unassign(&mut self, r: usize) {
        if let Some(h) = self.resident_to_hospital[r].take() {
            self.hospital_to_residents[h].remove(&r);
        }
    }
}
