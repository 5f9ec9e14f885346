//! Decision oracles for the well-partial-order relations and for the
//! `|_Pi` divisibility relation.
//!
//! Each oracle has an exhaustive counterpart in [`brute`] used by the test
//! suites; the production versions use greedy matching (Higman), bipartite
//! matching (multisets, Kruskal), and pruned backtracking (`|_Pi`).

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, Ring, SchemaId};
use crate::error::{Error, Result};
use crate::symmetry::IncWitness;

/// A finite poset given by an explicit reflexive comparison table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetTable {
    size: usize,
    leq: Vec<bool>,
}

impl PosetTable {
    /// Validates reflexivity, antisymmetry, and transitivity.
    pub fn new(size: usize, leq: Vec<bool>) -> Result<Self> {
        if leq.len() != size * size {
            return Err(Error::InvalidPoset(format!(
                "table has {} entries, expected {}",
                leq.len(),
                size * size
            )));
        }
        let t = PosetTable { size, leq };
        for a in 0..size {
            if !t.leq(a, a) {
                return Err(Error::InvalidPoset(format!("not reflexive at {a}")));
            }
            for b in 0..size {
                if a != b && t.leq(a, b) && t.leq(b, a) {
                    return Err(Error::InvalidPoset(format!("not antisymmetric at {a},{b}")));
                }
                for c in 0..size {
                    if t.leq(a, b) && t.leq(b, c) && !t.leq(a, c) {
                        return Err(Error::InvalidPoset(format!(
                            "not transitive at {a},{b},{c}"
                        )));
                    }
                }
            }
        }
        Ok(t)
    }

    /// Builds the reflexive-transitive closure of the given `a <= b` pairs,
    /// then validates antisymmetry.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; size * size];
        for i in 0..size {
            leq[i * size + i] = true;
        }
        for &(a, b) in pairs {
            if a >= size || b >= size {
                return Err(Error::LabelOutOfRange { label: a.max(b), size });
            }
            leq[a * size + b] = true;
        }
        // Floyd-Warshall style closure.
        for k in 0..size {
            for a in 0..size {
                if leq[a * size + k] {
                    for b in 0..size {
                        if leq[k * size + b] {
                            leq[a * size + b] = true;
                        }
                    }
                }
            }
        }
        PosetTable::new(size, leq)
    }

    /// The chain 0 < 1 < ... < n-1.
    pub fn chain(n: usize) -> Self {
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in a..n {
                leq[a * n + b] = true;
            }
        }
        PosetTable { size: n, leq }
    }

    /// n pairwise incomparable elements.
    pub fn antichain(n: usize) -> Self {
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        PosetTable { size: n, leq }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn check_label(&self, l: usize) -> Result<()> {
        if l < self.size {
            Ok(())
        } else {
            Err(Error::LabelOutOfRange { label: l, size: self.size })
        }
    }

    fn check_labels<'a>(&self, it: impl IntoIterator<Item = &'a usize>) -> Result<()> {
        for &l in it {
            self.check_label(l)?;
        }
        Ok(())
    }
}

/// A finite rooted tree with poset labels. Child order carries no meaning.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabelledTree {
    pub label: usize,
    #[serde(default)]
    pub children: Vec<LabelledTree>,
}

impl LabelledTree {
    pub fn leaf(label: usize) -> Self {
        LabelledTree { label, children: Vec::new() }
    }

    pub fn node(label: usize, children: Vec<LabelledTree>) -> Self {
        LabelledTree { label, children }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|c| c.size()).sum::<usize>()
    }

    /// Sorts children recursively into the derived structural order, so
    /// isomorphic trees become identical values.
    pub fn canonicalized(&self) -> LabelledTree {
        let mut children: Vec<LabelledTree> =
            self.children.iter().map(|c| c.canonicalized()).collect();
        children.sort();
        LabelledTree { label: self.label, children }
    }

    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![self.label];
        for c in &self.children {
            out.extend(c.labels());
        }
        out
    }
}

/// Componentwise order on equal-length tuples of naturals.
pub fn dickson_leq(a: &[u64], b: &[u64]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).all(|(x, y)| x <= y))
}

/// Multiset order: true iff an injective label-dominating map `a -> b`
/// exists, decided by maximum bipartite matching.
pub fn multiset_leq(a: &[usize], b: &[usize], poset: &PosetTable) -> Result<bool> {
    poset.check_labels(a.iter().chain(b))?;
    if a.len() > b.len() {
        return Ok(false);
    }
    let adj: Vec<Vec<usize>> = a
        .iter()
        .map(|&x| (0..b.len()).filter(|&j| poset.leq(x, b[j])).collect())
        .collect();
    Ok(max_bipartite_matching(&adj, b.len()) == a.len())
}

/// Higman sequence order: true iff a strictly increasing label-dominating
/// embedding exists. Greedy earliest-match is exact here: any embedding can
/// be exchanged position by position to the earliest one.
pub fn higman_leq(s: &[usize], t: &[usize], poset: &PosetTable) -> Result<bool> {
    poset.check_labels(s.iter().chain(t))?;
    Ok(higman_greedy_by(s, t, |a, b| poset.leq(*a, *b)).is_some())
}

/// Greedy Higman embedding against an arbitrary domination predicate;
/// returns the earliest embedding as 0-based positions into `t`.
pub(crate) fn higman_greedy_by<T>(
    s: &[T],
    t: &[T],
    leq: impl Fn(&T, &T) -> bool,
) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(s.len());
    let mut next = 0usize;
    for x in s {
        let hit = (next..t.len()).find(|&j| leq(x, &t[j]))?;
        out.push(hit);
        next = hit + 1;
    }
    Some(out)
}

/// Kruskal tree order: `a <= b` iff some vertex `v` of `b` has label at
/// least the root label of `a` and the root branches of `a` embed
/// injectively, label-dominatingly, into the branches at `v` (recursively).
///
/// Subtrees of both inputs are interned by canonical form into one arena, so
/// the (subtree, subtree) memo is shared across isomorphic nodes, and the
/// per-vertex branch assignment is a bipartite matching.
pub fn kruskal_leq(a: &LabelledTree, b: &LabelledTree, poset: &PosetTable) -> Result<bool> {
    poset.check_labels(a.labels().iter())?;
    poset.check_labels(b.labels().iter())?;
    let mut ctx = KruskalCtx {
        poset,
        arena: Vec::new(),
        ids: HashMap::new(),
        memo: HashMap::new(),
    };
    let ia = ctx.intern(&a.canonicalized());
    let ib = ctx.intern(&b.canonicalized());
    Ok(ctx.leq(ia, ib))
}

struct KruskalCtx<'a> {
    poset: &'a PosetTable,
    arena: Vec<(usize, Vec<usize>)>,
    ids: HashMap<LabelledTree, usize>,
    memo: HashMap<(usize, usize), bool>,
}

impl KruskalCtx<'_> {
    fn intern(&mut self, t: &LabelledTree) -> usize {
        if let Some(&id) = self.ids.get(t) {
            return id;
        }
        let kids: Vec<usize> = t.children.iter().map(|c| self.intern(c)).collect();
        let id = self.arena.len();
        self.arena.push((t.label, kids));
        self.ids.insert(t.clone(), id);
        id
    }

    fn leq(&mut self, a: usize, b: usize) -> bool {
        if let Some(&r) = self.memo.get(&(a, b)) {
            return r;
        }
        let mut r = self.fits_at(a, b);
        if !r {
            let kids = self.arena[b].1.clone();
            r = kids.into_iter().any(|c| self.leq(a, c));
        }
        self.memo.insert((a, b), r);
        r
    }

    /// Embedding that sends the root of `a` to the root of `b`.
    fn fits_at(&mut self, a: usize, b: usize) -> bool {
        let (la, ka) = self.arena[a].clone();
        let (lb, kb) = self.arena[b].clone();
        if !self.poset.leq(la, lb) || ka.len() > kb.len() {
            return false;
        }
        let adj: Vec<Vec<usize>> = ka
            .iter()
            .map(|&ca| (0..kb.len()).filter(|&j| self.leq(ca, kb[j])).collect())
            .collect();
        max_bipartite_matching(&adj, kb.len()) == ka.len()
    }
}

/// Kuhn's augmenting-path algorithm; `adj[i]` lists right-neighbours of
/// left vertex `i`. Returns the maximum matching size.
pub(crate) fn max_bipartite_matching(adj: &[Vec<usize>], n_right: usize) -> usize {
    let mut matched_right: Vec<Option<usize>> = vec![None; n_right];
    let mut count = 0;
    for left in 0..adj.len() {
        let mut used = vec![false; n_right];
        if try_augment(left, adj, &mut matched_right, &mut used) {
            count += 1;
        }
    }
    count
}

fn try_augment(
    left: usize,
    adj: &[Vec<usize>],
    matched_right: &mut [Option<usize>],
    used: &mut [bool],
) -> bool {
    for &r in &adj[left] {
        if used[r] {
            continue;
        }
        used[r] = true;
        if matched_right[r].is_none()
            || try_augment(matched_right[r].unwrap(), adj, matched_right, used)
        {
            matched_right[r] = Some(left);
            return true;
        }
    }
    false
}

/// Coordinate of the exponent aggregates: which symbol, which fixed
/// indices, which slot of the N-index tuple.
type AggCoord = (SchemaId, Vec<u32>, usize);

/// Searches for a witness `pi` with `pi(u) | v`; `None` when `u` does not
/// `Pi`-divide `v`.
///
/// The search enumerates strictly increasing maps from `support(u)` into
/// `support(v)` in lexicographic image order and returns the first that
/// works, so downstream reduction is deterministic. Candidates are pruned
/// by per-index exponent aggregates and by the gap condition that makes the
/// partial map a genuine restriction of an element of `Inc(N)`. On rings
/// where every symbol has at most one N-index the search collapses to the
/// greedy Higman embedding of the column-exponent words.
pub fn pi_divides(ring: &Ring, u: &Monomial, v: &Monomial) -> Result<Option<IncWitness>> {
    validate_schemas(ring, u)?;
    validate_schemas(ring, v)?;
    // Variables without N-indices are fixed by the action: plain
    // divisibility on that part is necessary, and it is all that part needs.
    for (var, e) in u.factors() {
        if ring.schema(var.schema()).free_arity == 0 && v.exponent_of(var) < *e {
            return Ok(None);
        }
    }
    let su: Vec<u32> = u.support().into_iter().collect();
    if su.is_empty() {
        return Ok(Some(IncWitness::default()));
    }
    if u.total_degree() > v.total_degree() {
        return Ok(None);
    }
    let sv: Vec<u32> = v.support().into_iter().collect();
    if su.len() > sv.len() {
        return Ok(None);
    }
    if ring.all_unit_free_arity() {
        return Ok(pi_divides_words(ring, u, v, &su));
    }
    let agg_u = aggregates(ring, u);
    let agg_v = aggregates(ring, v);
    let dominated = |s: u32, t: u32| -> bool {
        let Some(au) = agg_u.get(&s) else { return true };
        au.iter().all(|(coord, e)| {
            agg_v.get(&t).and_then(|av| av.get(coord)).map_or(false, |f| f >= e)
        })
    };
    let mut assignment: Vec<(u32, u32)> = Vec::with_capacity(su.len());
    if backtrack(u, v, &su, &sv, 0, 0, &dominated, &mut assignment) {
        let w = IncWitness::new(assignment).expect("search respects the gap condition");
        Ok(Some(w))
    } else {
        Ok(None)
    }
}

fn validate_schemas(ring: &Ring, m: &Monomial) -> Result<()> {
    for (v, _) in m.factors() {
        if v.schema().0 >= ring.schemas().len() {
            return Err(Error::RingMismatch(format!(
                "monomial uses schema id {} outside the ring",
                v.schema().0
            )));
        }
    }
    Ok(())
}

/// Word encoding for rings whose symbols all have at most one N-index: the
/// letter at column `j` is the vector of exponents of the variables with
/// N-index `j`, and `pi(u) | v` iff the `u`-word embeds into the `v`-word
/// letterwise-dominated. Zero letters of interior columns matter: they
/// occupy positions, which is exactly the gap condition.
fn pi_divides_words(ring: &Ring, u: &Monomial, v: &Monomial, su: &[u32]) -> Option<IncWitness> {
    let mut coords: BTreeMap<(SchemaId, Vec<u32>), usize> = BTreeMap::new();
    for (var, _) in u.factors().iter().chain(v.factors()) {
        if ring.schema(var.schema()).free_arity == 1 {
            let key = (var.schema(), var.fixed().to_vec());
            let next = coords.len();
            coords.entry(key).or_insert(next);
        }
    }
    let dim = coords.len();
    let word = |m: &Monomial, len: u32| -> Vec<Vec<u32>> {
        let mut w = vec![vec![0u32; dim]; len as usize + 1];
        for (var, e) in m.factors() {
            if ring.schema(var.schema()).free_arity == 1 {
                let c = coords[&(var.schema(), var.fixed().to_vec())];
                w[var.free()[0] as usize][c] += e;
            }
        }
        w
    };
    let p = *su.last().expect("nonempty support");
    let q = v.support().into_iter().next_back().unwrap_or(0);
    if p > q {
        return None;
    }
    let wu = word(u, p);
    let wv = word(v, q);
    let s: Vec<&Vec<u32>> = (1..=p as usize).map(|j| &wu[j]).collect();
    let t: Vec<&Vec<u32>> = (1..=q as usize).map(|j| &wv[j]).collect();
    let embed = higman_greedy_by(&s, &t, |a, b| a.iter().zip(b.iter()).all(|(x, y)| x <= y))?;
    let pairs: Vec<(u32, u32)> = su
        .iter()
        .map(|&j| (j, embed[j as usize - 1] as u32 + 1))
        .collect();
    Some(IncWitness::new(pairs).expect("restriction of a total increasing map"))
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    u: &Monomial,
    v: &Monomial,
    su: &[u32],
    sv: &[u32],
    k: usize,
    mut j: usize,
    dominated: &impl Fn(u32, u32) -> bool,
    assignment: &mut Vec<(u32, u32)>,
) -> bool {
    if k == su.len() {
        let w = IncWitness::new(assignment.clone()).expect("gap condition maintained");
        return match w.apply(u) {
            Ok(pu) => pu.divides(v),
            Err(_) => false,
        };
    }
    let s = su[k];
    // Extendability to Inc(N): the image must leave room for the skipped
    // source indices.
    let lower = match assignment.last() {
        None => s,
        Some(&(ps, pt)) => pt + (s - ps),
    };
    while j < sv.len() && sv.len() - j >= su.len() - k {
        let t = sv[j];
        j += 1;
        if t < lower || !dominated(s, t) {
            continue;
        }
        assignment.push((s, t));
        if backtrack(u, v, su, sv, k + 1, j, dominated, assignment) {
            return true;
        }
        assignment.pop();
    }
    false
}

fn aggregates(ring: &Ring, m: &Monomial) -> BTreeMap<u32, BTreeMap<AggCoord, u32>> {
    let mut out: BTreeMap<u32, BTreeMap<AggCoord, u32>> = BTreeMap::new();
    for (var, e) in m.factors() {
        if ring.schema(var.schema()).free_arity == 0 {
            continue;
        }
        for (pos, &idx) in var.free().iter().enumerate() {
            *out.entry(idx)
                .or_default()
                .entry((var.schema(), var.fixed().to_vec(), pos))
                .or_default() += e;
        }
    }
    out
}

/// Exhaustive reference implementations. Slow by construction; they share
/// no search logic with the production oracles.
pub mod brute {
    use super::*;

    pub fn dickson_leq(a: &[u64], b: &[u64]) -> Result<bool> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        let mut ok = true;
        for i in 0..a.len() {
            if a[i] > b[i] {
                ok = false;
            }
        }
        Ok(ok)
    }

    /// Tries every injective assignment `a -> b`.
    pub fn multiset_leq(a: &[usize], b: &[usize], poset: &PosetTable) -> Result<bool> {
        super::PosetTable::check_labels(poset, a.iter().chain(b))?;
        fn rec(a: &[usize], b: &[usize], poset: &PosetTable, k: usize, used: &mut [bool]) -> bool {
            if k == a.len() {
                return true;
            }
            for j in 0..b.len() {
                if !used[j] && poset.leq(a[k], b[j]) {
                    used[j] = true;
                    if rec(a, b, poset, k + 1, used) {
                        return true;
                    }
                    used[j] = false;
                }
            }
            false
        }
        Ok(rec(a, b, poset, 0, &mut vec![false; b.len()]))
    }

    /// Tries every strictly increasing map `[p] -> [q]`.
    pub fn higman_leq(s: &[usize], t: &[usize], poset: &PosetTable) -> Result<bool> {
        super::PosetTable::check_labels(poset, s.iter().chain(t))?;
        fn rec(s: &[usize], t: &[usize], poset: &PosetTable, k: usize, from: usize) -> bool {
            if k == s.len() {
                return true;
            }
            for j in from..t.len() {
                if poset.leq(s[k], t[j]) && rec(s, t, poset, k + 1, j + 1) {
                    return true;
                }
            }
            false
        }
        Ok(rec(s, t, poset, 0, 0))
    }

    /// Direct recursion on the definition: try every vertex of `b` as the
    /// image of the root of `a` and every injective branch assignment.
    pub fn kruskal_leq(a: &LabelledTree, b: &LabelledTree, poset: &PosetTable) -> Result<bool> {
        poset.check_labels(a.labels().iter())?;
        poset.check_labels(b.labels().iter())?;
        Ok(leq(a, b, poset))
    }

    fn leq(a: &LabelledTree, b: &LabelledTree, poset: &PosetTable) -> bool {
        fits(a, b, poset) || b.children.iter().any(|c| leq(a, c, poset))
    }

    fn fits(a: &LabelledTree, b: &LabelledTree, poset: &PosetTable) -> bool {
        if !poset.leq(a.label, b.label) {
            return false;
        }
        fn assign(
            ca: &[LabelledTree],
            cb: &[LabelledTree],
            poset: &PosetTable,
            k: usize,
            used: &mut [bool],
        ) -> bool {
            if k == ca.len() {
                return true;
            }
            for j in 0..cb.len() {
                if !used[j] && leq(&ca[k], &cb[j], poset) {
                    used[j] = true;
                    if assign(ca, cb, poset, k + 1, used) {
                        return true;
                    }
                    used[j] = false;
                }
            }
            false
        }
        assign(&a.children, &b.children, poset, 0, &mut vec![false; b.children.len()])
    }

    /// Enumerates every valid increasing map `support(u) -> support(v)` in
    /// lexicographic image order and returns the first witness that works.
    pub fn pi_divides(ring: &Ring, u: &Monomial, v: &Monomial) -> Result<Option<IncWitness>> {
        super::validate_schemas(ring, u)?;
        super::validate_schemas(ring, v)?;
        let su: Vec<u32> = u.support().into_iter().collect();
        let sv: Vec<u32> = v.support().into_iter().collect();
        let mut picked: Vec<(u32, u32)> = Vec::new();
        fn rec(
            u: &Monomial,
            v: &Monomial,
            su: &[u32],
            sv: &[u32],
            k: usize,
            from: usize,
            picked: &mut Vec<(u32, u32)>,
        ) -> Option<IncWitness> {
            if k == su.len() {
                let w = IncWitness::new(picked.clone()).ok()?;
                return match w.apply(u) {
                    Ok(pu) if pu.divides(v) => Some(w),
                    _ => None,
                };
            }
            for j in from..sv.len() {
                picked.push((su[k], sv[j]));
                if IncWitness::new(picked.clone()).is_ok() {
                    if let Some(w) = rec(u, v, su, sv, k + 1, j + 1, picked) {
                        return Some(w);
                    }
                }
                picked.pop();
            }
            None
        }
        if su.is_empty() {
            return Ok(if u.divides(v) { Some(IncWitness::default()) } else { None });
        }
        Ok(rec(u, v, &su, &sv, 0, 0, &mut picked))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Field, IndexConstraint, SymbolSchema, Variable};

    #[test]
    fn dickson_basics() {
        assert!(dickson_leq(&[1, 2], &[1, 3]).unwrap());
        assert!(!dickson_leq(&[2, 1], &[1, 3]).unwrap());
        assert!(dickson_leq(&[], &[]).unwrap());
        assert!(matches!(dickson_leq(&[1], &[]), Err(Error::LengthMismatch(1, 0))));
    }

    #[test]
    fn multiset_basics() {
        let chain = PosetTable::chain(3);
        assert!(multiset_leq(&[], &[2, 0], &chain).unwrap());
        assert!(!multiset_leq(&[0, 0], &[0], &chain).unwrap());
        // {1,2} <= {2,2} in a chain: both assignments must be explored.
        assert!(multiset_leq(&[1, 2], &[2, 2], &chain).unwrap());
        assert!(matches!(
            multiset_leq(&[3], &[0], &chain),
            Err(Error::LabelOutOfRange { label: 3, size: 3 })
        ));
    }

    #[test]
    fn higman_basics() {
        let chain = PosetTable::chain(6);
        assert!(higman_leq(&[], &[1, 2], &chain).unwrap());
        assert!(!higman_leq(&[1], &[], &chain).unwrap());
        // (1,2) embeds into (5,1,3) at positions 2,3 (1-based).
        assert!(higman_leq(&[1, 2], &[5, 1, 3], &chain).unwrap());
        assert!(!higman_leq(&[2, 1], &[1, 2], &PosetTable::antichain(3)).unwrap());
    }

    #[test]
    fn kruskal_basics() {
        let chain = PosetTable::chain(4);
        // Single node embeds anywhere a large enough label exists.
        let single = LabelledTree::leaf(2);
        let path213 = LabelledTree::node(
            2,
            vec![LabelledTree::node(1, vec![LabelledTree::leaf(3)])],
        );
        assert!(kruskal_leq(&single, &path213, &chain).unwrap());
        assert!(!kruskal_leq(&LabelledTree::leaf(3), &LabelledTree::leaf(2), &chain).unwrap());
        // Reflexivity via the identity embedding.
        assert!(kruskal_leq(&path213, &path213, &chain).unwrap());
        // Path (1,2) into path (2,1,3).
        let path12 = LabelledTree::node(1, vec![LabelledTree::leaf(2)]);
        assert!(kruskal_leq(&path12, &path213, &chain).unwrap());
        // Star with two leaves does not embed into a path of two vertices.
        let star = LabelledTree::node(0, vec![LabelledTree::leaf(0), LabelledTree::leaf(0)]);
        let path2 = LabelledTree::node(0, vec![LabelledTree::leaf(0)]);
        assert!(!kruskal_leq(&star, &path2, &chain).unwrap());
        assert!(kruskal_leq(&path2, &star, &chain).unwrap());
    }

    fn row_ring(k: u32) -> Ring {
        Ring::new(
            vec![SymbolSchema::new("x", vec![k], 1, IndexConstraint::None).unwrap()],
            Field::Rational,
        )
        .unwrap()
    }

    fn xr(r: &Ring, i: u32, j: u32) -> Variable {
        Variable::new(r, r.schema_by_name("x").unwrap(), vec![i], vec![j]).unwrap()
    }

    #[test]
    fn pi_divides_row_example() {
        let r = row_ring(2);
        let u = Monomial::from_factors(vec![(xr(&r, 1, 1), 1), (xr(&r, 2, 3), 1)]);
        let v = Monomial::from_factors(vec![
            (xr(&r, 1, 2), 1),
            (xr(&r, 2, 5), 1),
            (xr(&r, 1, 7), 1),
        ]);
        let w = pi_divides(&r, &u, &v).unwrap().expect("divides");
        assert_eq!(w.pairs(), &[(1, 2), (3, 5)]);
        assert!(w.apply(&u).unwrap().divides(&v));
        assert_eq!(brute::pi_divides(&r, &u, &v).unwrap(), Some(w));
    }

    #[test]
    fn pi_divides_identity_for_one() {
        let r = row_ring(1);
        let v = Monomial::var(xr(&r, 1, 4));
        let w = pi_divides(&r, &Monomial::one(), &v).unwrap().unwrap();
        assert!(w.is_identity());
        assert!(w.pairs().is_empty());
    }

    fn nbyn_ring() -> Ring {
        Ring::new(
            vec![SymbolSchema::new("y", vec![], 2, IndexConstraint::None).unwrap()],
            Field::Rational,
        )
        .unwrap()
    }

    /// The monomial of the directed m-cycle 1 -> 2 -> ... -> m -> 1.
    fn cycle(r: &Ring, m: u32) -> Monomial {
        let y = r.schema_by_name("y").unwrap();
        let mut fs = Vec::new();
        for i in 1..=m {
            let j = if i == m { 1 } else { i + 1 };
            fs.push((Variable::new(r, y, vec![], vec![i, j]).unwrap(), 1));
        }
        Monomial::from_factors(fs)
    }

    #[test]
    fn cycles_are_pairwise_incomparable() {
        let r = nbyn_ring();
        let c2 = cycle(&r, 2);
        let c3 = cycle(&r, 3);
        assert!(pi_divides(&r, &c2, &c3).unwrap().is_none());
        assert!(pi_divides(&r, &c3, &c2).unwrap().is_none());
        assert!(pi_divides(&r, &c3, &c3).unwrap().unwrap().is_identity());
    }

    #[test]
    fn pi_divides_needs_room_between_indices() {
        // u = x_1 x_3, v = x_2 x_3: the only dominating assignment
        // {1->2, 3->3} leaves no room for index 2, so it is not a
        // restriction of any increasing map.
        let r = row_ring(1);
        let u = Monomial::from_factors(vec![(xr(&r, 1, 1), 1), (xr(&r, 1, 3), 1)]);
        let v = Monomial::from_factors(vec![(xr(&r, 1, 2), 1), (xr(&r, 1, 3), 1)]);
        assert!(pi_divides(&r, &u, &v).unwrap().is_none());
        assert!(brute::pi_divides(&r, &u, &v).unwrap().is_none());
        // With v = x_2 x_4 there is room: {1->2, 3->4}.
        let v2 = Monomial::from_factors(vec![(xr(&r, 1, 2), 1), (xr(&r, 1, 4), 1)]);
        let w = pi_divides(&r, &u, &v2).unwrap().unwrap();
        assert_eq!(w.pairs(), &[(1, 2), (3, 4)]);
    }

    #[test]
    fn fixed_only_symbols_compare_directly() {
        let r = Ring::new(
            vec![
                SymbolSchema::new("c", vec![3], 0, IndexConstraint::None).unwrap(),
                SymbolSchema::new("x", vec![], 1, IndexConstraint::None).unwrap(),
            ],
            Field::Rational,
        )
        .unwrap();
        let c1 = Variable::new(&r, r.schema_by_name("c").unwrap(), vec![1], vec![]).unwrap();
        let x1 = Variable::new(&r, r.schema_by_name("x").unwrap(), vec![], vec![1]).unwrap();
        let u = Monomial::from_factors(vec![(c1.clone(), 2), (x1.clone(), 1)]);
        let v_ok = Monomial::from_factors(vec![(c1.clone(), 2), (x1.clone(), 2)]);
        let v_no = Monomial::from_factors(vec![(c1, 1), (x1, 2)]);
        assert!(pi_divides(&r, &u, &v_ok).unwrap().is_some());
        assert!(pi_divides(&r, &u, &v_no).unwrap().is_none());
    }
}
