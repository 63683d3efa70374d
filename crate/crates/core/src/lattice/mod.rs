//! Graded face lattices with faces identified by their atom (vertex) sets.
//!
//! A [`FaceLattice`] always contains the empty face as bottom and the full
//! atom set as top. The order is inclusion of atom supports; ranks are
//! recomputed from longest chains and grading is checked, never assumed.

mod io;
mod iso;

pub use io::{LatticeFile, LatticeInput};
pub use iso::are_isomorphic;

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Set of atom indices.
pub type AtomSet = FixedBitSet;

/// Builds an [`AtomSet`] of capacity `atom_count` from indices.
pub fn atom_set<I: IntoIterator<Item = usize>>(atom_count: usize, atoms: I) -> AtomSet {
    let mut s = FixedBitSet::with_capacity(atom_count);
    for a in atoms {
        s.insert(a);
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    atom_count: usize,
    length: usize,
    graded: bool,
    faces: Vec<AtomSet>,
    rank: Vec<usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    by_rank: Vec<Vec<usize>>,
    // reflexive order ideals / filters as element bitsets
    below: Vec<FixedBitSet>,
    above: Vec<FixedBitSet>,
    index: HashMap<AtomSet, usize>,
}

impl FaceLattice {
    /// Poset of the given faces ordered by inclusion. The empty face and
    /// the full atom set are added; every singleton must be present.
    pub fn from_faces<I>(atom_count: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = AtomSet>,
    {
        let mut set: HashSet<AtomSet> = HashSet::new();
        for mut f in faces {
            if f.len() > atom_count {
                if let Some(max) = f.maximum().filter(|&m| m >= atom_count) {
                    return Err(Error::AtomOutOfRange {
                        atom: max,
                        atom_count,
                    });
                }
            }
            f.grow(atom_count);
            set.insert(normalized(f, atom_count));
        }
        set.insert(FixedBitSet::with_capacity(atom_count));
        let mut full = FixedBitSet::with_capacity(atom_count);
        full.insert_range(..);
        set.insert(full);
        for a in 0..atom_count {
            if !set.contains(&atom_set(atom_count, [a])) {
                return Err(Error::NotAtomistic(a));
            }
        }
        Ok(Self::build(atom_count, set.into_iter().collect()))
    }

    fn build(atom_count: usize, mut faces: Vec<AtomSet>) -> Self {
        faces.sort_by_key(|f| f.count_ones(..));
        let n = faces.len();
        let sizes: Vec<usize> = faces.iter().map(|f| f.count_ones(..)).collect();

        // covers: minimal strict supersets, scanned in size order
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let mut mins: Vec<usize> = Vec::new();
            for y in x + 1..n {
                if sizes[y] == sizes[x] || !faces[x].is_subset(&faces[y]) {
                    continue;
                }
                if mins.iter().all(|&m| !faces[m].is_subset(&faces[y])) {
                    mins.push(y);
                }
            }
            up[x] = mins;
        }
        let mut rank = vec![0usize; n];
        for x in 0..n {
            for &y in &up[x] {
                rank[y] = rank[y].max(rank[x] + 1);
            }
        }
        let graded = n > 1 && (0..n).all(|x| up[x].iter().all(|&y| rank[y] == rank[x] + 1));

        // canonical element order: (rank, sorted atom list)
        let keys: Vec<(usize, Vec<usize>)> = faces
            .iter()
            .zip(&rank)
            .map(|(f, &r)| (r, f.ones().collect()))
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut new_id = vec![0usize; n];
        for (i, &old) in order.iter().enumerate() {
            new_id[old] = i;
        }
        let faces: Vec<AtomSet> = order.iter().map(|&o| faces[o].clone()).collect();
        let rank: Vec<usize> = order.iter().map(|&o| rank[o]).collect();
        let mut ups: Vec<Vec<usize>> = order
            .iter()
            .map(|&o| up[o].iter().map(|&y| new_id[y]).collect())
            .collect();
        let mut downs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (x, ys) in ups.iter_mut().enumerate() {
            ys.sort_unstable();
            for &y in ys.iter() {
                downs[y].push(x);
            }
        }
        let length = rank[n - 1];
        let mut by_rank = vec![Vec::new(); length + 1];
        for (x, &r) in rank.iter().enumerate() {
            by_rank[r].push(x);
        }

        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            let mut b = FixedBitSet::with_capacity(n);
            b.insert(x);
            for &c in &downs[x] {
                b.union_with(&below[c]);
            }
            below[x] = b;
        }
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for x in (0..n).rev() {
            let mut a = FixedBitSet::with_capacity(n);
            a.insert(x);
            for &c in &ups[x] {
                a.union_with(&above[c]);
            }
            above[x] = a;
        }
        let index = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i))
            .collect();

        FaceLattice {
            atom_count,
            length,
            graded,
            faces,
            rank,
            up: ups,
            down: downs,
            by_rank,
            below,
            above,
            index,
        }
    }

    pub fn atom_count(&self) -> usize {
        self.atom_count
    }

    /// Rank of the top element.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn support(&self, x: usize) -> &AtomSet {
        &self.faces[x]
    }

    /// Sorted atom indices of element `x`.
    pub fn atoms_of(&self, x: usize) -> Vec<usize> {
        self.faces[x].ones().collect()
    }

    pub fn element(&self, support: &AtomSet) -> Option<usize> {
        let mut s = support.clone();
        s.grow(self.atom_count);
        self.index.get(&s).copied()
    }

    pub fn covers_up(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn covers_down(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn elements_of_rank(&self, r: usize) -> &[usize] {
        self.by_rank.get(r).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Elements `z` with `z <= x` (including `x`).
    pub fn below(&self, x: usize) -> &FixedBitSet {
        &self.below[x]
    }

    /// Elements `z` with `z >= x` (including `x`).
    pub fn above(&self, x: usize) -> &FixedBitSet {
        &self.above[x]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    pub fn atoms(&self) -> &[usize] {
        self.elements_of_rank(1)
    }

    /// Rank-(length-1) elements.
    pub fn coatoms(&self) -> &[usize] {
        if self.length == 0 {
            return &[];
        }
        self.elements_of_rank(self.length - 1)
    }

    /// Counts of proper faces by rank 1..length-1; entry `i` counts
    /// rank-(i+1) elements, i.e. `i`-dimensional faces.
    pub fn f_vector(&self) -> Vec<usize> {
        (1..self.length)
            .map(|r| self.by_rank[r].len())
            .collect()
    }

    /// Atom sets of the coatoms, each sorted.
    pub fn coatom_sets(&self) -> Vec<Vec<usize>> {
        self.coatoms().iter().map(|&c| self.atoms_of(c)).collect()
    }

    /// Atom sets grouped by rank, bottom through top.
    pub fn faces_by_rank(&self) -> Vec<Vec<Vec<usize>>> {
        self.by_rank
            .iter()
            .map(|xs| xs.iter().map(|&x| self.atoms_of(x)).collect())
            .collect()
    }

    fn require_graded(&self) -> Result<()> {
        if self.graded {
            Ok(())
        } else {
            Err(Error::NotGraded)
        }
    }
}

fn normalized(mut f: AtomSet, atom_count: usize) -> AtomSet {
    if f.len() != atom_count {
        let mut g = FixedBitSet::with_capacity(atom_count);
        g.extend(f.ones().filter(|&i| i < atom_count));
        f = g;
    }
    f
}

/// Face lattice generated by the facets: all intersections of facet
/// subsets, with the empty face at the bottom and the whole atom set on top.
pub fn lattice_from_facets(facets: &[Vec<usize>], atom_count: usize) -> Result<FaceLattice> {
    lattice_from_facets_limited(facets, atom_count, None)
}

/// [`lattice_from_facets`] that aborts with [`Error::SizeLimit`] once the
/// closure exceeds `limit` faces.
pub fn lattice_from_facets_limited(
    facets: &[Vec<usize>],
    atom_count: usize,
    limit: Option<usize>,
) -> Result<FaceLattice> {
    if atom_count == 0 {
        return Err(Error::NoAtoms);
    }
    let mut sets = Vec::with_capacity(facets.len());
    let mut covered = FixedBitSet::with_capacity(atom_count);
    for facet in facets {
        if let Some(&bad) = facet.iter().find(|&&a| a >= atom_count) {
            return Err(Error::AtomOutOfRange {
                atom: bad,
                atom_count,
            });
        }
        let s = atom_set(atom_count, facet.iter().copied());
        covered.union_with(&s);
        sets.push(s);
    }
    for i in 0..sets.len() {
        for j in 0..sets.len() {
            if i == j {
                continue;
            }
            if sets[i] == sets[j] {
                return Err(Error::DuplicateFacet(i.max(j)));
            }
            if sets[i].is_subset(&sets[j]) {
                return Err(Error::NestedFacet { inner: i, outer: j });
            }
        }
    }
    if let Some(a) = (0..atom_count).find(|&a| !covered.contains(a)) {
        return Err(Error::UncoveredAtom(a));
    }

    let mut seen: HashSet<AtomSet> = sets.iter().cloned().collect();
    let mut work: Vec<AtomSet> = sets.clone();
    while let Some(face) = work.pop() {
        for facet in &sets {
            let meet = &face & facet;
            if !seen.contains(&meet) {
                seen.insert(meet.clone());
                work.push(meet);
                if let Some(limit) = limit {
                    if seen.len() + 2 > limit {
                        return Err(Error::SizeLimit(format!(
                            "face lattice exceeds {limit} elements"
                        )));
                    }
                }
            }
        }
    }
    let lattice = FaceLattice::from_faces(atom_count, seen)?;
    lattice.require_graded()?;
    Ok(lattice)
}

/// Every pair of elements has a unique meet and join.
///
/// A finite bounded poset is a lattice as soon as all pairwise meets
/// exist, so only meets are examined.
pub fn is_lattice(l: &FaceLattice) -> bool {
    let n = l.len();
    for x in 0..n {
        for y in x + 1..n {
            if l.leq(x, y) || l.leq(y, x) {
                continue;
            }
            let common = &l.below[x] & &l.below[y];
            let maximal: Vec<usize> = common
                .ones()
                .filter(|&z| l.up[z].iter().all(|&c| !common.contains(c)))
                .collect();
            if maximal.len() != 1 {
                return false;
            }
        }
    }
    true
}

/// Every interval of length at least one has as many elements of even
/// rank as of odd rank. Checked by parity counting.
pub fn is_eulerian(l: &FaceLattice) -> bool {
    if !l.graded {
        return false;
    }
    let n = l.len();
    let mut even = FixedBitSet::with_capacity(n);
    for x in 0..n {
        if l.rank[x].is_multiple_of(2) {
            even.insert(x);
        }
    }
    for x in 0..n {
        let above_even = &l.above[x] & &even;
        for y in l.above[x].ones() {
            // length-1 intervals are balanced automatically
            if l.rank[y] < l.rank[x] + 2 {
                continue;
            }
            let total = l.above[x].intersection_count(&l.below[y]);
            let evens = above_even.intersection_count(&l.below[y]);
            if 2 * evens != total {
                return false;
            }
        }
    }
    true
}

/// Möbius function `mu(x, y)` for every `y >= x`, indexed by element.
pub fn mobius_from(l: &FaceLattice, x: usize) -> Vec<Option<i64>> {
    let n = l.len();
    let mut mu: Vec<Option<i64>> = vec![None; n];
    let mut ys: Vec<usize> = l.above[x].ones().collect();
    ys.sort_by_key(|&y| l.rank[y]);
    for y in ys {
        if y == x {
            mu[y] = Some(1);
            continue;
        }
        let s: i64 = l.above[x]
            .intersection(&l.below[y])
            .filter(|&z| z != y)
            .map(|z| mu[z].unwrap_or(0))
            .sum();
        mu[y] = Some(-s);
    }
    mu
}

/// Eulerian test through the Möbius function: `mu(x, y) = (-1)^(rank y - rank x)`.
pub fn is_eulerian_mobius(l: &FaceLattice) -> bool {
    if !l.graded {
        return false;
    }
    (0..l.len()).all(|x| {
        let mu = mobius_from(l, x);
        l.above[x].ones().all(|y| {
            let expect = if (l.rank[y] - l.rank[x]).is_multiple_of(2) { 1 } else { -1 };
            mu[y] == Some(expect)
        })
    })
}

/// The bipartite atom/coatom incidence graph is connected.
pub fn is_connected(l: &FaceLattice) -> bool {
    if !l.graded || l.length < 2 {
        return false;
    }
    incidence_connected(l, l.bottom(), l.top())
}

fn incidence_connected(l: &FaceLattice, lo: usize, hi: usize) -> bool {
    let atoms: Vec<usize> = l.up[lo]
        .iter()
        .copied()
        .filter(|&a| l.leq(a, hi))
        .collect();
    let coatoms: Vec<usize> = l.down[hi]
        .iter()
        .copied()
        .filter(|&c| l.leq(lo, c))
        .collect();
    if atoms.is_empty() || coatoms.is_empty() {
        return false;
    }
    // BFS over atoms; two atoms are adjacent when they share a coatom
    let mut seen_atom = vec![false; atoms.len()];
    let mut seen_coatom = vec![false; coatoms.len()];
    let mut stack = vec![0usize];
    seen_atom[0] = true;
    while let Some(i) = stack.pop() {
        for (j, &c) in coatoms.iter().enumerate() {
            if seen_coatom[j] || !l.leq(atoms[i], c) {
                continue;
            }
            seen_coatom[j] = true;
            for (k, &a) in atoms.iter().enumerate() {
                if !seen_atom[k] && l.leq(a, c) {
                    seen_atom[k] = true;
                    stack.push(k);
                }
            }
        }
    }
    seen_atom.iter().all(|&s| s) && seen_coatom.iter().all(|&s| s)
}

/// Every interval of length at least 3 has a connected atom/coatom graph.
pub fn intervals_connected(l: &FaceLattice) -> bool {
    if !l.graded {
        return false;
    }
    (0..l.len()).all(|x| {
        l.above[x]
            .ones()
            .filter(|&y| l.rank[y] >= l.rank[x] + 3)
            .all(|y| incidence_connected(l, x, y))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    NotGraded,
    GradedPoset,
    Lattice,
    EulerianLattice,
    ConnectedEulerianLattice,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Classification::NotGraded => "not-graded",
            Classification::GradedPoset => "graded-poset",
            Classification::Lattice => "lattice",
            Classification::EulerianLattice => "eulerian-lattice",
            Classification::ConnectedEulerianLattice => "connected-eulerian-lattice",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchyReport {
    pub is_graded: bool,
    pub is_lattice: bool,
    pub is_eulerian: bool,
    pub is_connected: bool,
    /// Set only when the stricter interval connectivity was requested.
    pub intervals_connected: Option<bool>,
    pub classification: Classification,
}

/// Runs the graded / lattice / Eulerian / connected checks. With
/// `strict_intervals`, connectivity also requires every interval of
/// length at least 3 to be connected.
pub fn hierarchy_report(l: &FaceLattice, strict_intervals: bool) -> HierarchyReport {
    if !l.graded {
        return HierarchyReport {
            is_graded: false,
            is_lattice: false,
            is_eulerian: false,
            is_connected: false,
            intervals_connected: strict_intervals.then_some(false),
            classification: Classification::NotGraded,
        };
    }
    let lattice = is_lattice(l);
    let eulerian = is_eulerian(l);
    let intervals = strict_intervals.then(|| intervals_connected(l));
    let connected = is_connected(l) && intervals.unwrap_or(true);
    let classification = match (lattice, eulerian, connected) {
        (false, _, _) => Classification::GradedPoset,
        (true, false, _) => Classification::Lattice,
        (true, true, false) => Classification::EulerianLattice,
        (true, true, true) => Classification::ConnectedEulerianLattice,
    };
    HierarchyReport {
        is_graded: true,
        is_lattice: lattice,
        is_eulerian: eulerian,
        is_connected: connected,
        intervals_connected: intervals,
        classification,
    }
}

/// Order dual. Atoms of the result are the coatoms of `l`; each element
/// is supported by the coatoms above it.
pub fn dual(l: &FaceLattice) -> Result<FaceLattice> {
    l.require_graded()?;
    let coatoms = l.coatoms();
    let members: Vec<usize> = (0..l.len()).collect();
    let supports: Vec<AtomSet> = members
        .iter()
        .map(|&x| {
            atom_set(
                coatoms.len(),
                coatoms
                    .iter()
                    .enumerate()
                    .filter(|&(_, &c)| l.leq(x, c))
                    .map(|(i, _)| i),
            )
        })
        .collect();
    if !order_matches(l, &members, &supports, true) {
        return Err(Error::NotAtomistic(0));
    }
    FaceLattice::from_faces(coatoms.len(), supports)
}

/// The interval `[x, y]`, re-graded from 0 with the elements covering `x`
/// as atoms.
pub fn interval(l: &FaceLattice, x: usize, y: usize) -> Result<FaceLattice> {
    if x >= l.len() {
        return Err(Error::NoSuchElement(x));
    }
    if y >= l.len() {
        return Err(Error::NoSuchElement(y));
    }
    if !l.leq(x, y) {
        return Err(Error::NotComparable);
    }
    let members: Vec<usize> = l.above[x].intersection(&l.below[y]).collect();
    let atoms: Vec<usize> = l.up[x].iter().copied().filter(|&a| l.leq(a, y)).collect();
    let supports: Vec<AtomSet> = members
        .iter()
        .map(|&z| {
            atom_set(
                atoms.len(),
                atoms
                    .iter()
                    .enumerate()
                    .filter(|&(_, &a)| l.leq(a, z))
                    .map(|(i, _)| i),
            )
        })
        .collect();
    if !order_matches(l, &members, &supports, false) {
        return Err(Error::NotAtomistic(0));
    }
    FaceLattice::from_faces(atoms.len(), supports)
}

// Supports must reproduce the order of `l` on `members` (reversed for duals).
fn order_matches(l: &FaceLattice, members: &[usize], supports: &[AtomSet], reversed: bool) -> bool {
    members.iter().enumerate().all(|(i, &a)| {
        members.iter().enumerate().all(|(j, &b)| {
            let sub = supports[i].is_subset(&supports[j]);
            if reversed {
                l.leq(b, a) == sub
            } else {
                l.leq(a, b) == sub
            }
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceTypeFlags {
    pub simplicial: bool,
    pub simple: bool,
    /// `None` for length-4 input.
    pub two_simplicial: Option<bool>,
    pub two_simple: Option<bool>,
    pub all_facets_simple: Option<bool>,
}

/// Simplicial/simple and, for length 5, the 2-simplicial, 2-simple and
/// simple-facet properties.
pub fn face_type_flags(l: &FaceLattice) -> Result<FaceTypeFlags> {
    l.require_graded()?;
    if l.length != 4 && l.length != 5 {
        return Err(Error::WrongLength {
            expected: 5,
            found: l.length,
        });
    }
    let simplicial = coatoms_boolean(l);
    let simple = coatoms_boolean(&dual(l)?);
    if l.length == 4 {
        return Ok(FaceTypeFlags {
            simplicial,
            simple,
            two_simplicial: None,
            two_simple: None,
            all_facets_simple: None,
        });
    }
    let two_simplicial = l.elements_of_rank(3).iter().all(|&x| l.faces[x].count_ones(..) == 3);
    let coatoms = l.coatoms();
    let two_simple = l
        .elements_of_rank(2)
        .iter()
        .all(|&e| coatoms.iter().filter(|&&c| l.leq(e, c)).count() == 3);
    let ridges = l.elements_of_rank(3);
    let all_facets_simple = coatoms.iter().all(|&c| {
        l.atoms().iter().filter(|&&v| l.leq(v, c)).all(|&v| {
            ridges
                .iter()
                .filter(|&&r| l.leq(v, r) && l.leq(r, c))
                .count()
                == 3
        })
    });
    Ok(FaceTypeFlags {
        simplicial,
        simple,
        two_simplicial: Some(two_simplicial),
        two_simple: Some(two_simple),
        all_facets_simple: Some(all_facets_simple),
    })
}

// every [bottom, coatom] is Boolean
fn coatoms_boolean(l: &FaceLattice) -> bool {
    l.coatoms().iter().all(|&c| {
        let k = l.faces[c].count_ones(..);
        k == l.rank[c] && k < usize::BITS as usize && l.below[c].count_ones(..) == 1 << k
    })
}

#[cfg(test)]
mod tests;
