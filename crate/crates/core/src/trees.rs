//! Finite m-ary word trees and the combinatorics of the two affine pavings.
//!
//! A word is a finite sequence over `{1..m}`, a tree a finite set of words
//! closed under taking left subwords (prefixes). Words are compared
//! lexicographically with a proper prefix preceding its extensions, which is
//! the derived `Ord` on [`Word`].
//!
//! The punctual cell of a tree `T` has dimension `|D(T)|`, where `D(T)` is the
//! set of triples `(ω, k, ω')` with `ω ∈ T`, `ωk ∉ T`, `ω' ∈ T`,
//! `ω' <_lex ωk` and `ω'` not a prefix of `ω`. The membership `ω ∈ T` is not
//! part of the displayed condition in the source but is forced by context;
//! without it `D(T)` would be infinite.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::LaurentPolynomial;
use crate::series::{tri, TwistedSeries};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    /// The empty word, root of every non-empty tree.
    pub fn root() -> Self {
        Self(Vec::new())
    }

    pub fn from_letters(letters: impl Into<Vec<u32>>) -> Self {
        Self(letters.into())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    /// `ωk`.
    pub fn child(&self, k: u32) -> Self {
        let mut letters = self.0.clone();
        letters.push(k);
        Self(letters)
    }

    /// `kω`.
    pub fn prepend(&self, k: u32) -> Self {
        let mut letters = Vec::with_capacity(self.0.len() + 1);
        letters.push(k);
        letters.extend_from_slice(&self.0);
        Self(letters)
    }

    pub fn parent(&self) -> Option<Self> {
        let (_, init) = self.0.split_last()?;
        Some(Self(init.to_vec()))
    }

    /// Whether `self` is a left subword (initial segment) of `other`.
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{self}")
    }
}

/// Total lexicographic order: `1 < 2 < ... < m` letterwise, a proper prefix first.
pub fn lex_compare(a: &Word, b: &Word) -> Ordering {
    a.cmp(b)
}

/// The prefix order: `a ⪯ b` iff `a` is a left subword of `b`.
pub fn prefix_leq(a: &Word, b: &Word) -> bool {
    a.is_prefix_of(b)
}

/// The order `⊴`: a prefix precedes its extensions, and after a common prefix
/// the branch with the larger letter comes first.
pub fn triangle_compare(a: &Word, b: &Word) -> Ordering {
    for (x, y) in a.0.iter().zip(&b.0) {
        if x != y {
            return y.cmp(x);
        }
    }
    a.len().cmp(&b.len())
}

/// A finite set of words over `{1..arity}` closed under left subwords,
/// stored in lexicographic order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    arity: u32,
    words: Vec<Word>,
}

impl Tree {
    pub fn new(arity: u32, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::InvalidArgument("alphabet size must be positive".into()));
        }
        let mut words: Vec<Word> = words.into_iter().collect();
        words.sort();
        words.dedup();
        for w in &words {
            if let Some(&letter) = w.0.iter().find(|&&l| l == 0 || l > arity) {
                return Err(Error::LetterOutOfRange { letter, arity });
            }
        }
        let tree = Self { arity, words };
        let closed = tree
            .words
            .iter()
            .all(|w| w.parent().is_none_or(|p| tree.contains(&p)));
        if !closed {
            return Err(Error::NotSubwordClosed);
        }
        Ok(tree)
    }

    /// Convenience constructor from letter slices.
    pub fn from_slices(arity: u32, words: &[&[u32]]) -> Result<Self> {
        Self::new(arity, words.iter().map(|w| Word::from_letters(w.to_vec())))
    }

    pub fn empty(arity: u32) -> Self {
        Self { arity, words: Vec::new() }
    }

    /// The one-node tree `{∅}`.
    pub fn root_only(arity: u32) -> Self {
        Self {
            arity,
            words: vec![Word::root()],
        }
    }

    /// The chain `{∅, (k), (k,k), ...}` with `len` nodes.
    pub fn chain(arity: u32, k: u32, len: usize) -> Result<Self> {
        Self::new(arity, (0..len).map(|n| Word(vec![k; n])))
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// Index of `w` in lexicographic order.
    pub fn position(&self, w: &Word) -> Option<usize> {
        self.words.binary_search(w).ok()
    }

    /// Number of tree words strictly lex-smaller than `w`.
    fn count_below(&self, w: &Word) -> usize {
        self.words.partition_point(|x| x < w)
    }

    /// Pairs `(ω, k)` with `ω ∈ T` and `ωk ∉ T`.
    pub fn boundary_pairs(&self) -> impl Iterator<Item = (&Word, u32)> + '_ {
        self.words.iter().flat_map(move |w| {
            (1..=self.arity)
                .filter(move |&k| !self.contains(&w.child(k)))
                .map(move |k| (w, k))
        })
    }

    /// Number of words having `w` as a prefix (including `w`).
    pub fn subtree_size(&self, w: &Word) -> usize {
        let start = self.count_below(w);
        self.words[start..]
            .iter()
            .take_while(|x| w.is_prefix_of(x))
            .count()
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree[m={}]{self}", self.arity)
    }
}

/// The tree's words enumerated in the order `⊴`.
pub fn triangle_sort(tree: &Tree) -> Vec<Word> {
    let mut words = tree.words.clone();
    words.sort_by(triangle_compare);
    words
}

/// A triple `(ω, k, ω')`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Triple {
    pub word: Word,
    pub letter: u32,
    pub other: Word,
}

/// `(m - 1)|T| + 1` for non-empty trees, counted directly.
pub fn boundary_count(tree: &Tree) -> usize {
    tree.boundary_pairs().count()
}

/// Triples indexing the coordinates of the full paving cell `S_T`:
/// `ω ∈ T`, `ωk ∉ T`, `ω' ∈ T`, `ω' <_lex ωk`.
pub fn full_cell_triples(tree: &Tree) -> Vec<Triple> {
    let mut out = Vec::new();
    for (w, k) in tree.boundary_pairs() {
        let bound = w.child(k);
        for other in tree.words.iter().take_while(|o| **o < bound) {
            out.push(Triple {
                word: w.clone(),
                letter: k,
                other: other.clone(),
            });
        }
    }
    out
}

/// `dim S_T`.
pub fn cell_dim_full(tree: &Tree) -> usize {
    tree.boundary_pairs()
        .map(|(w, k)| tree.count_below(&w.child(k)))
        .sum()
}

/// The set `D(T)`.
pub fn d_set(tree: &Tree) -> Vec<Triple> {
    full_cell_triples(tree)
        .into_iter()
        .filter(|t| !t.other.is_prefix_of(&t.word))
        .collect()
}

/// `|D(T)|`, the dimension of the punctual cell.
///
/// Every prefix of `ω` lies in `T` and precedes `ωk`, so the count for a
/// boundary pair is the lex rank of `ωk` minus `|ω| + 1`.
pub fn cell_dim_punctual(tree: &Tree) -> usize {
    tree.boundary_pairs()
        .map(|(w, k)| tree.count_below(&w.child(k)) - (w.len() + 1))
        .sum()
}

/// `{∅} ∪ ⋃_k k·T_k`.
pub fn graft(arity: u32, branches: &[Tree]) -> Result<Tree> {
    if branches.len() != arity as usize {
        return Err(Error::InvalidArgument(alloc::format!(
            "grafting needs {arity} branches, got {}",
            branches.len()
        )));
    }
    if let Some(b) = branches.iter().find(|b| b.arity != arity) {
        return Err(Error::InvalidArgument(alloc::format!(
            "branch over alphabet of size {} grafted onto arity {arity}",
            b.arity
        )));
    }
    let mut words = Vec::with_capacity(1 + branches.iter().map(Tree::len).sum::<usize>());
    words.push(Word::root());
    // k ascending and each branch sorted, so the result is already in lex order
    for (k, branch) in (1..=arity).zip(branches) {
        words.extend(branch.words.iter().map(|w| w.prepend(k)));
    }
    Ok(Tree { arity, words })
}

/// The unique `(T_1, ..., T_m)` whose grafting is `tree`.
pub fn ungraft(tree: &Tree) -> Result<Vec<Tree>> {
    if tree.is_empty() {
        return Err(Error::EmptyTree);
    }
    let mut branches: Vec<Tree> = (0..tree.arity).map(|_| Tree::empty(tree.arity)).collect();
    for w in tree.words.iter().filter(|w| !w.is_root()) {
        let k = w.0[0] as usize;
        branches[k - 1].words.push(Word(w.0[1..].to_vec()));
    }
    Ok(branches)
}

/// Checks `|D(T)| = Σ_k |D(T_k)| + Σ_{k'<k} |T_k'| ((m-1)|T_k| + 1)` against
/// the ungrafting of `tree`. The empty tree satisfies it vacuously.
pub fn d_recursion_check(tree: &Tree) -> Result<bool> {
    if tree.is_empty() {
        return Ok(d_set(tree).is_empty());
    }
    let branches = ungraft(tree)?;
    let m = tree.arity as usize;
    let inner: usize = branches.iter().map(cell_dim_punctual).sum();
    let mut cross = 0;
    for k in 0..branches.len() {
        for kp in 0..k {
            cross += branches[kp].len() * ((m - 1) * branches[k].len() + 1);
        }
    }
    Ok(d_set(tree).len() == inner + cross)
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `binomial(md, d) / ((m-1)d + 1)`, the number of `d`-node m-ary trees.
pub fn fuss_catalan(m: u32, d: usize) -> BigUint {
    let (m, d) = (m as u64, d as u64);
    let b = binomial(m * d, d);
    let den = BigUint::from(m.saturating_sub(1) * d + 1);
    let (q, r) = b.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// Default cap on materialized trees.
pub const DEFAULT_MAX_TREES: u64 = 1_000_000;

/// All `d`-element trees over `{1..m}`, each once, in lex order of their
/// sorted word lists. Refuses when more than `cap` trees would be produced.
pub fn enumerate_trees(m: u32, d: usize, cap: u64) -> Result<Vec<Tree>> {
    if m == 0 {
        return Err(Error::InvalidArgument("alphabet size must be positive".into()));
    }
    let count = fuss_catalan(m, d);
    if count > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            what: "trees",
            count,
            cap,
        });
    }
    let mut by_size: Vec<Vec<Tree>> = vec![vec![Tree::empty(m)]];
    for n in 1..=d {
        let mut level = Vec::new();
        let mut parts = vec![0usize; m as usize];
        for_each_composition(n - 1, &mut parts, 0, &mut |parts| {
            graft_products(m, parts, &by_size, &mut level);
        });
        by_size.push(level);
    }
    let mut out = by_size.pop().unwrap_or_default();
    out.sort();
    Ok(out)
}

/// Calls `f` on every composition of `total` into `parts.len()` non-negative parts.
fn for_each_composition(total: usize, parts: &mut [usize], idx: usize, f: &mut impl FnMut(&[usize])) {
    if idx + 1 == parts.len() {
        parts[idx] = total;
        f(parts);
        return;
    }
    for n in 0..=total {
        parts[idx] = n;
        for_each_composition(total - n, parts, idx + 1, f);
    }
}

fn graft_products(m: u32, sizes: &[usize], by_size: &[Vec<Tree>], out: &mut Vec<Tree>) {
    let mut chosen: Vec<&Tree> = Vec::with_capacity(sizes.len());
    fn rec<'a>(
        m: u32,
        sizes: &[usize],
        by_size: &'a [Vec<Tree>],
        chosen: &mut Vec<&'a Tree>,
        out: &mut Vec<Tree>,
    ) {
        let idx = chosen.len();
        if idx == sizes.len() {
            let branches: Vec<Tree> = chosen.iter().map(|t| (*t).clone()).collect();
            out.push(graft(m, &branches).expect("branch count matches arity"));
            return;
        }
        for t in &by_size[sizes[idx]] {
            chosen.push(t);
            rec(m, sizes, by_size, chosen, out);
            chosen.pop();
        }
    }
    rec(m, sizes, by_size, &mut chosen, out);
}

/// A bijection `f: T → {1..d}` monotone for the prefix order.
/// `labels[i]` is the value on the `i`-th word of the tree in lex order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CompatibleOrdering {
    pub labels: Vec<usize>,
}

impl CompatibleOrdering {
    pub fn is_compatible_with(&self, tree: &Tree) -> bool {
        let d = tree.len();
        if self.labels.len() != d {
            return false;
        }
        let mut seen = vec![false; d];
        for &l in &self.labels {
            if l == 0 || l > d || core::mem::replace(&mut seen[l - 1], true) {
                return false;
            }
        }
        tree.words.iter().enumerate().all(|(i, w)| {
            w.parent().is_none_or(|p| {
                let pi = tree.position(&p).expect("tree is prefix closed");
                self.labels[pi] < self.labels[i]
            })
        })
    }
}

/// Number of compatible orderings, by the hook length formula for rooted forests:
/// `d! / Π_ω |subtree(ω)|`.
pub fn linear_extension_count(tree: &Tree) -> BigUint {
    let d = tree.len() as u64;
    let fact: BigUint = (1..=d).map(BigUint::from).product();
    let hooks: BigUint = tree
        .words
        .iter()
        .map(|w| BigUint::from(tree.subtree_size(w)))
        .product();
    fact / hooks
}

/// Every compatible ordering of `tree`, refusing when there are more than `cap`.
pub fn linear_extensions(tree: &Tree, cap: u64) -> Result<Vec<CompatibleOrdering>> {
    let count = linear_extension_count(tree);
    if count > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            what: "linear extensions",
            count,
            cap,
        });
    }
    let d = tree.len();
    let parent: Vec<Option<usize>> = tree
        .words
        .iter()
        .map(|w| w.parent().and_then(|p| tree.position(&p)))
        .collect();
    let mut labels = vec![0usize; d];
    let mut out = Vec::with_capacity(count.to_usize().unwrap_or(0));
    fn rec(
        next: usize,
        d: usize,
        parent: &[Option<usize>],
        labels: &mut [usize],
        out: &mut Vec<CompatibleOrdering>,
    ) {
        if next > d {
            out.push(CompatibleOrdering {
                labels: labels.to_vec(),
            });
            return;
        }
        for i in 0..d {
            let available = labels[i] == 0 && parent[i].is_none_or(|p| labels[p] != 0);
            if available {
                labels[i] = next;
                rec(next + 1, d, parent, labels, out);
                labels[i] = 0;
            }
        }
    }
    rec(1, d, &parent, &mut labels, &mut out);
    Ok(out)
}

/// Which affine paving a census refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PavingKind {
    /// Cells `S_T` of the full Hilbert scheme.
    Full,
    /// Cells of the punctual Hilbert scheme, dimension `|D(T)|`.
    Punctual,
}

/// Cell generating series up to `t^dmax`.
///
/// Punctual: `Σ_T q^(|D(T)| - (m-1)|T|(|T|-1)/2) t^|T|`, normalized like the
/// punctual functional equation. Full: `Σ_T q^(dim S_T) t^|T|`, unnormalized.
pub fn paving_series(
    m: u32,
    dmax: usize,
    kind: PavingKind,
    cap: u64,
) -> Result<TwistedSeries<LaurentPolynomial>> {
    let mut coeffs = Vec::with_capacity(dmax + 1);
    for d in 0..=dmax {
        let trees = enumerate_trees(m, d, cap)?;
        let mut c = LaurentPolynomial::zero();
        for t in &trees {
            let exp = match kind {
                PavingKind::Full => cell_dim_full(t) as i64,
                PavingKind::Punctual => {
                    cell_dim_punctual(t) as i64 - (m as i64 - 1) * tri(d)
                }
            };
            c.add_term(exp, 1.into());
        }
        coeffs.push(c);
    }
    Ok(TwistedSeries::new(0, coeffs))
}

/// Per-tree statistics for the census export.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub tree_id: usize,
    pub tree: Tree,
    pub dim_full: usize,
    pub dim_punctual: usize,
    pub linear_extensions: BigUint,
}

pub fn census(m: u32, d: usize, cap: u64) -> Result<Vec<CensusRow>> {
    Ok(enumerate_trees(m, d, cap)?
        .into_iter()
        .enumerate()
        .map(|(tree_id, tree)| CensusRow {
            tree_id,
            dim_full: cell_dim_full(&tree),
            dim_punctual: cell_dim_punctual(&tree),
            linear_extensions: linear_extension_count(&tree),
            tree,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: &[u32]) -> Word {
        Word::from_letters(l.to_vec())
    }

    fn t(m: u32, words: &[&[u32]]) -> Tree {
        Tree::from_slices(m, words).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(lex_compare(&w(&[]), &w(&[2])), Ordering::Less);
        assert_eq!(lex_compare(&w(&[1, 2]), &w(&[2])), Ordering::Less);
        assert_eq!(lex_compare(&w(&[1]), &w(&[1, 1])), Ordering::Less);
        assert!(prefix_leq(&w(&[]), &w(&[2, 1])));
        assert!(prefix_leq(&w(&[1]), &w(&[1, 2])));
        assert!(!prefix_leq(&w(&[2]), &w(&[1, 2])));
    }

    #[test]
    fn triangle_order_examples() {
        assert_eq!(triangle_sort(&t(2, &[&[], &[1], &[2]])), vec![w(&[]), w(&[2]), w(&[1])]);
        assert_eq!(triangle_sort(&t(2, &[&[]])), vec![w(&[])]);
        assert_eq!(
            triangle_sort(&t(2, &[&[], &[1], &[1, 1]])),
            vec![w(&[]), w(&[1]), w(&[1, 1])]
        );
    }

    #[test]
    fn tree_validation() {
        assert_eq!(Tree::from_slices(2, &[&[1]]), Err(Error::NotSubwordClosed));
        assert_eq!(
            Tree::from_slices(2, &[&[], &[3]]),
            Err(Error::LetterOutOfRange { letter: 3, arity: 2 })
        );
        assert_eq!(Tree::from_slices(2, &[&[], &[], &[1]]).unwrap().len(), 2);
    }

    #[test]
    fn enumeration_examples() {
        let two = enumerate_trees(2, 2, DEFAULT_MAX_TREES).unwrap();
        assert_eq!(two, vec![t(2, &[&[], &[1]]), t(2, &[&[], &[2]])]);
        assert_eq!(enumerate_trees(2, 3, DEFAULT_MAX_TREES).unwrap().len(), 5);
        assert_eq!(enumerate_trees(3, 3, DEFAULT_MAX_TREES).unwrap().len(), 12);
        assert_eq!(enumerate_trees(2, 0, 1).unwrap(), vec![Tree::empty(2)]);
        match enumerate_trees(2, 10, 100) {
            Err(Error::CapExceeded { count, cap, .. }) => {
                assert_eq!(count, BigUint::from(16796u32));
                assert_eq!(cap, 100);
            }
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn fuss_catalan_examples() {
        assert_eq!(fuss_catalan(2, 4), BigUint::from(14u32));
        assert_eq!(fuss_catalan(1, 9), BigUint::one());
        assert_eq!(fuss_catalan(3, 3), BigUint::from(12u32));
        assert_eq!(fuss_catalan(3, 0), BigUint::one());
    }

    #[test]
    fn cell_dimension_examples() {
        let a = t(2, &[&[], &[1]]);
        let b = t(2, &[&[], &[2]]);
        assert_eq!(cell_dim_full(&a), 6);
        assert_eq!(cell_dim_full(&b), 5);
        for m in 1..=4 {
            assert_eq!(cell_dim_full(&Tree::root_only(m)), m as usize);
            assert_eq!(cell_dim_punctual(&Tree::root_only(m)), 0);
        }
        assert_eq!(
            d_set(&a),
            vec![Triple {
                word: w(&[]),
                letter: 2,
                other: w(&[1])
            }]
        );
        assert_eq!(d_set(&b), vec![]);
    }

    #[test]
    fn grafting() {
        let fork = t(2, &[&[], &[1], &[2]]);
        assert_eq!(ungraft(&fork).unwrap(), vec![Tree::root_only(2), Tree::root_only(2)]);
        assert_eq!(
            graft(2, &[Tree::empty(2), Tree::root_only(2)]).unwrap(),
            t(2, &[&[], &[2]])
        );
        assert_eq!(ungraft(&Tree::empty(2)), Err(Error::EmptyTree));
        assert!(graft(2, &[Tree::empty(2)]).is_err());
    }

    #[test]
    fn boundary_examples() {
        for tree in enumerate_trees(2, 3, DEFAULT_MAX_TREES).unwrap() {
            assert_eq!(boundary_count(&tree), 4);
        }
        assert_eq!(boundary_count(&Tree::chain(1, 1, 5).unwrap()), 1);
        assert_eq!(boundary_count(&Tree::root_only(3)), 3);
    }

    #[test]
    fn recursion_examples() {
        for tree in enumerate_trees(2, 3, DEFAULT_MAX_TREES).unwrap() {
            assert!(d_recursion_check(&tree).unwrap());
        }
        assert!(d_recursion_check(&Tree::root_only(2)).unwrap());
        assert_eq!(d_recursion_check(&Tree::empty(2)), Ok(true));
    }

    #[test]
    fn linear_extension_examples() {
        assert_eq!(linear_extension_count(&Tree::chain(2, 1, 6).unwrap()), BigUint::one());
        let fork = t(2, &[&[], &[1], &[2]]);
        assert_eq!(linear_extension_count(&fork), BigUint::from(2u32));
        let listed = linear_extensions(&fork, 10).unwrap();
        assert_eq!(listed.len(), 2);
        assert!(listed.iter().all(|o| o.is_compatible_with(&fork)));
        let total: BigUint = enumerate_trees(3, 3, DEFAULT_MAX_TREES)
            .unwrap()
            .iter()
            .map(linear_extension_count)
            .sum();
        assert_eq!(total, BigUint::from(15u32));
        assert!(matches!(linear_extensions(&fork, 1), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn paving_series_examples() {
        let punctual = paving_series(2, 2, PavingKind::Punctual, DEFAULT_MAX_TREES).unwrap();
        assert_eq!(
            punctual.coeff(2).shift(1),
            LaurentPolynomial::from_coeffs(0, [1, 1])
        );
        let full = paving_series(2, 2, PavingKind::Full, DEFAULT_MAX_TREES).unwrap();
        assert_eq!(full.coeff(2), &LaurentPolynomial::from_coeffs(5, [1, 1]));
        assert_eq!(full.coeff(0), &LaurentPolynomial::one());
        assert_eq!(punctual.coeff(0), &LaurentPolynomial::one());
    }

    #[test]
    fn census_rows() {
        let rows = census(3, 3, DEFAULT_MAX_TREES).unwrap();
        assert_eq!(rows.len(), 12);
        let total: BigUint = rows.iter().map(|r| r.linear_extensions.clone()).sum();
        assert_eq!(total, BigUint::from(15u32));
    }
}
