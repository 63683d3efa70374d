//! Exact isomorphism test for face lattices.
//!
//! Elements are determined by their atom supports, so an isomorphism is a
//! bijection of atoms that maps the family of supports onto itself with
//! ranks preserved. Atoms are assigned one at a time; after each step the
//! multiset of partial images `(rank, |support|, support ∩ mapped)` has to
//! agree on both sides, which is necessary for any completion.

use fixedbitset::FixedBitSet;

use super::FaceLattice;

// (rank, up-degree, down-degree, support size)
fn element_signatures(l: &FaceLattice) -> Vec<(usize, usize, usize, usize)> {
    (0..l.len())
        .map(|x| {
            (
                l.rank(x),
                l.covers_up(x).len(),
                l.covers_down(x).len(),
                l.support(x).count_ones(..),
            )
        })
        .collect()
}

// per atom: number of elements of each (rank, up-degree) containing it
fn atom_signatures(l: &FaceLattice) -> Vec<Vec<(usize, usize, usize)>> {
    let mut sig = vec![Vec::new(); l.atom_count()];
    for x in 0..l.len() {
        let key = (l.rank(x), l.covers_up(x).len(), l.covers_down(x).len());
        for a in l.support(x).ones() {
            sig[a].push(key);
        }
    }
    for s in &mut sig {
        s.sort_unstable();
    }
    sig
}

struct Search<'a> {
    a: &'a FaceLattice,
    b: &'a FaceLattice,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    used: Vec<bool>,
    // partial images, both expressed over atoms of `b`
    image_a: Vec<FixedBitSet>,
    restrict_b: Vec<FixedBitSet>,
}

impl Search<'_> {
    fn consistent(&self) -> bool {
        let key = |l: &FaceLattice, x: usize, s: &FixedBitSet| {
            (l.rank(x), l.support(x).count_ones(..), s.ones().collect::<Vec<_>>())
        };
        let mut ka: Vec<_> = (0..self.a.len()).map(|x| key(self.a, x, &self.image_a[x])).collect();
        let mut kb: Vec<_> = (0..self.b.len())
            .map(|y| key(self.b, y, &self.restrict_b[y]))
            .collect();
        ka.sort_unstable();
        kb.sort_unstable();
        ka == kb
    }

    fn assign(&mut self, i: usize, j: usize, on: bool) {
        for x in 0..self.a.len() {
            if self.a.support(x).contains(i) {
                self.image_a[x].set(j, on);
            }
        }
        for y in 0..self.b.len() {
            if self.b.support(y).contains(j) {
                self.restrict_b[y].set(j, on);
            }
        }
        self.used[j] = on;
    }

    fn solve(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let i = self.order[k];
        for c in 0..self.candidates[i].len() {
            let j = self.candidates[i][c];
            if self.used[j] {
                continue;
            }
            self.assign(i, j, true);
            if self.consistent() && self.solve(k + 1) {
                return true;
            }
            self.assign(i, j, false);
        }
        false
    }
}

/// True iff there is a rank-preserving order isomorphism between the two
/// lattices.
pub fn are_isomorphic(a: &FaceLattice, b: &FaceLattice) -> bool {
    if a.atom_count() != b.atom_count()
        || a.len() != b.len()
        || a.length() != b.length()
        || a.is_graded() != b.is_graded()
    {
        return false;
    }
    let mut sa = element_signatures(a);
    let mut sb = element_signatures(b);
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let atom_sig_a = atom_signatures(a);
    let atom_sig_b = atom_signatures(b);
    let mut ma = atom_sig_a.clone();
    let mut mb = atom_sig_b.clone();
    ma.sort();
    mb.sort();
    if ma != mb {
        return false;
    }

    let n = a.atom_count();
    // candidate lists ordered by signature, then index
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| atom_sig_b[j] == atom_sig_a[i]).collect())
        .collect();

    // atoms in BFS order along shared rank-2 elements so each new atom is
    // constrained by those already placed
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&i| !placed[i])
            .min_by_key(|&i| (candidates[i].len(), i))
            .expect("unplaced atom");
        placed[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            order.push(i);
            for &e in a.elements_of_rank(2) {
                if !a.support(e).contains(i) {
                    continue;
                }
                for j in a.support(e).ones() {
                    if !placed[j] {
                        placed[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
    }

    let mut search = Search {
        a,
        b,
        order,
        candidates,
        used: vec![false; n],
        image_a: vec![FixedBitSet::with_capacity(n); a.len()],
        restrict_b: vec![FixedBitSet::with_capacity(n); b.len()],
    };
    search.solve(0)
}
