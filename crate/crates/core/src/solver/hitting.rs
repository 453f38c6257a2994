//! Exact minimum hitting set by branch and bound.
//!
//! Two passes. The first finds the optimum size: branch on the unhit
//! constraint with the fewest still-allowed elements, bound with a greedy
//! packing of pairwise disjoint unhit constraints, and start from a greedy
//! max-coverage incumbent. The second walks vertices in ascending id order,
//! include-first, under the now-known budget; the first hitting set it
//! reaches is the lexicographically least optimal one.

use crate::bitset::VertexSet;
use crate::resolution::ConstraintSystem;

#[derive(Debug, Clone)]
pub struct HittingSolution {
    pub size: usize,
    /// Lexicographically least minimum hitting set.
    pub witness: VertexSet,
    /// Pairwise disjoint constraints from the root packing bound.
    pub certificate: Vec<VertexSet>,
    pub nodes: u64,
}

pub fn minimum_hitting_set(system: &ConstraintSystem) -> HittingSolution {
    let n = system.n();
    let sets: Vec<&VertexSet> = system.sets().collect();
    if sets.is_empty() {
        return HittingSolution {
            size: 0,
            witness: VertexSet::empty(n),
            certificate: Vec::new(),
            nodes: 0,
        };
    }

    let all: Vec<usize> = (0..sets.len()).collect();
    let everything = VertexSet::full(n);
    let certificate = disjoint_packing(n, &sets, &all, &everything);
    let greedy = greedy_cover(n, &sets);

    let mut search = Search {
        n,
        sets: &sets,
        best: greedy.len(),
        nodes: 0,
    };
    if certificate.len() < search.best {
        let mut excluded = VertexSet::empty(n);
        search.optimize(&all, 0, &mut excluded);
    }
    let size = search.best;

    let mut chosen = VertexSet::empty(n);
    let witness = search
        .lex_least(&all, 0, size, &mut chosen)
        .expect("a hitting set of optimal size exists");

    HittingSolution {
        size,
        witness,
        certificate: certificate.into_iter().map(|i| sets[i].clone()).collect(),
        nodes: search.nodes,
    }
}

/// Greedy pairwise disjoint subfamily of `active` after restricting each
/// constraint to `allowed`, scanning in order.
fn disjoint_packing(n: usize, sets: &[&VertexSet], active: &[usize], allowed: &VertexSet) -> Vec<usize> {
    let mut used = VertexSet::empty(n);
    let mut picked = Vec::new();
    for &i in active {
        let s = sets[i].intersection(allowed);
        if !s.is_empty() && !s.intersects(&used) {
            used.union_with(&s);
            picked.push(i);
        }
    }
    picked
}

fn greedy_cover(n: usize, sets: &[&VertexSet]) -> VertexSet {
    let mut chosen = VertexSet::empty(n);
    let mut unhit: Vec<usize> = (0..sets.len()).collect();
    while !unhit.is_empty() {
        let best = (0..n)
            .filter(|&v| !chosen.contains(v))
            .max_by_key(|&v| {
                let hits = unhit.iter().filter(|&&i| sets[i].contains(v)).count();
                (hits, std::cmp::Reverse(v))
            })
            .expect("every constraint is non-empty");
        chosen.insert(best);
        unhit.retain(|&i| !sets[i].contains(best));
    }
    chosen
}

struct Search<'a> {
    n: usize,
    sets: &'a [&'a VertexSet],
    best: usize,
    nodes: u64,
}

impl Search<'_> {
    fn optimize(&mut self, unhit: &[usize], count: usize, excluded: &mut VertexSet) {
        self.nodes += 1;
        if unhit.is_empty() {
            self.best = self.best.min(count);
            return;
        }
        let allowed = VertexSet::full(self.n).difference(excluded);
        if count + disjoint_packing(self.n, self.sets, unhit, &allowed).len() >= self.best {
            return;
        }
        let avail = unhit
            .iter()
            .map(|&i| self.sets[i].intersection(&allowed))
            .min_by_key(VertexSet::len)
            .expect("non-empty");
        let mut newly_excluded = Vec::new();
        for v in avail.iter() {
            if count + 1 >= self.best {
                break;
            }
            let rest: Vec<usize> = unhit.iter().copied().filter(|&i| !self.sets[i].contains(v)).collect();
            self.optimize(&rest, count + 1, excluded);
            excluded.insert(v);
            newly_excluded.push(v);
        }
        for v in newly_excluded {
            excluded.remove(v);
        }
    }

    /// Ascending-id include-first walk from vertex `next`; returns the first
    /// hitting set of size at most `budget`.
    fn lex_least(&mut self, unhit: &[usize], next: usize, budget: usize, chosen: &mut VertexSet) -> Option<VertexSet> {
        self.nodes += 1;
        if unhit.is_empty() {
            return Some(chosen.clone());
        }
        if next >= self.n || chosen.len() >= budget {
            return None;
        }
        let mut allowed = VertexSet::empty(self.n);
        for v in next..self.n {
            allowed.insert(v);
        }
        if unhit.iter().any(|&i| !self.sets[i].intersects(&allowed)) {
            return None;
        }
        if chosen.len() + disjoint_packing(self.n, self.sets, unhit, &allowed).len() > budget {
            return None;
        }
        // a vertex that hits nothing new cannot belong to a minimum hitting set
        if unhit.iter().any(|&i| self.sets[i].contains(next)) {
            let rest: Vec<usize> = unhit.iter().copied().filter(|&i| !self.sets[i].contains(next)).collect();
            chosen.insert(next);
            let found = self.lex_least(&rest, next + 1, budget, chosen);
            chosen.remove(next);
            if found.is_some() {
                return found;
            }
        }
        self.lex_least(unhit, next + 1, budget, chosen)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::Source;
    use itertools::Itertools;

    fn system(n: usize, sets: &[&[usize]]) -> ConstraintSystem {
        ConstraintSystem::from_sets(
            n,
            sets.iter()
                .enumerate()
                .map(|(i, s)| (VertexSet::from_ids(n, s.iter().copied()), Source::Set { index: i })),
        )
    }

    fn brute(n: usize, sets: &[&[usize]]) -> (usize, Vec<usize>) {
        for k in 0..=n {
            for combo in (0..n).combinations(k) {
                if sets.iter().all(|s| s.iter().any(|v| combo.contains(v))) {
                    return (k, combo);
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn single_singleton() {
        let sol = minimum_hitting_set(&system(1, &[&[0]]));
        assert_eq!(sol.size, 1);
        assert_eq!(sol.witness.to_vec(), vec![0]);
    }

    #[test]
    fn disjoint_sets_need_one_each() {
        let sol = minimum_hitting_set(&system(6, &[&[0, 1], &[2, 3], &[4, 5]]));
        assert_eq!(sol.size, 3);
        assert_eq!(sol.witness.to_vec(), vec![0, 2, 4]);
        assert_eq!(sol.certificate.len(), 3);
    }

    #[test]
    fn lex_least_witness() {
        let sets: &[&[usize]] = &[&[1, 3], &[2, 3], &[0, 3]];
        let sol = minimum_hitting_set(&system(4, sets));
        assert_eq!((sol.size, sol.witness.to_vec()), (1, vec![3]));
        let sets: &[&[usize]] = &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]];
        let sol = minimum_hitting_set(&system(4, sets));
        assert_eq!((sol.size, sol.witness.to_vec()), (2, vec![0, 2]));
    }

    #[test]
    fn empty_system() {
        let sol = minimum_hitting_set(&system(3, &[]));
        assert_eq!(sol.size, 0);
        assert!(sol.witness.is_empty());
    }

    #[test]
    fn agrees_with_brute_force_on_random_systems() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=9);
            let m = rng.gen_range(1..=8);
            let owned: Vec<Vec<usize>> = (0..m)
                .map(|_| {
                    let mut s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.35)).collect();
                    if s.is_empty() {
                        s.push(rng.gen_range(0..n));
                    }
                    s
                })
                .collect();
            let sets: Vec<&[usize]> = owned.iter().map(Vec::as_slice).collect();
            let sol = minimum_hitting_set(&system(n, &sets));
            let (k, witness) = brute(n, &sets);
            assert_eq!(sol.size, k, "{owned:?}");
            assert_eq!(sol.witness.to_vec(), witness, "{owned:?}");
        }
    }
}
