//! Finite posets and bounded lattices as explicit tables.
//!
//! Lattices are stored as total join/meet tables over indices `0..size`:
//! O(n²) memory buys O(1) lookups inside the O(n³) sweeps that dominate
//! everything else in this crate. The induced order is `a ≤ b` iff
//! `a ∨ b = b`.
//!
//! Alongside the basic order-theoretic queries (join-irreducibles, finitely
//! prime elements, distributivity) this module carries two checks that hold
//! for *every* lattice, distributive or not:
//!
//! - `check_prime_splitting`: for finitely prime `k` and
//!   `o = ⋁{b : b ≱ k}`, always `k ≰ o`;
//! - `check_primes_join_irreducible`: finitely prime elements are
//!   join-irreducible.
//!
//! Both are expected to pass on every valid lattice; the reports exist so
//! sweeps can exercise them as universally-quantified tests.

use crate::error::{Error, Result};
use crate::report::{CheckReport, Witness};

/// Total binary operation table over `0..size`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpTable {
    size: usize,
    cells: Vec<usize>,
}

impl OpTable {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut cells = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                cells.push(f(a, b));
            }
        }
        OpTable { size, cells }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline(always)]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.size + b]
    }

    pub fn set(&mut self, a: usize, b: usize, v: usize) {
        self.cells[a * self.size + b] = v;
    }

    /// Errors if any cell is not a valid index.
    pub fn check_bounds(&self) -> Result<()> {
        match self.cells.iter().find(|&&v| v >= self.size) {
            Some(&v) => Err(Error::IndexOutOfRange {
                index: v,
                size: self.size,
            }),
            None => Ok(()),
        }
    }
}

/// Finite poset: carrier `0..size` with an explicit order relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinPoset {
    size: usize,
    leq: Vec<bool>,
}

impl FinPoset {
    /// Builds a poset from strict/non-strict pairs `a ≤ b`. The relation is
    /// closed reflexively and transitively; antisymmetry violations are
    /// rejected.
    pub fn new(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; size * size];
        for i in 0..size {
            leq[i * size + i] = true;
        }
        for &(a, b) in pairs {
            if a >= size || b >= size {
                return Err(Error::IndexOutOfRange {
                    index: a.max(b),
                    size,
                });
            }
            leq[a * size + b] = true;
        }
        // transitive closure
        for k in 0..size {
            for i in 0..size {
                if leq[i * size + k] {
                    for j in 0..size {
                        if leq[k * size + j] {
                            leq[i * size + j] = true;
                        }
                    }
                }
            }
        }
        for a in 0..size {
            for b in 0..size {
                if a != b && leq[a * size + b] && leq[b * size + a] {
                    return Err(Error::InvalidPoset(format!(
                        "antisymmetry fails: {a} <= {b} and {b} <= {a}"
                    )));
                }
            }
        }
        Ok(FinPoset { size, leq })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    /// All pairs `(a, b)` with `a ≤ b` and `a ≠ b`, ascending.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.size {
            for b in 0..self.size {
                if a != b && self.leq(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        FinPoset::new(n, &pairs).expect("chain is a poset")
    }

    pub fn antichain(n: usize) -> Self {
        FinPoset::new(n, &[]).expect("antichain is a poset")
    }

    /// One minimum below two incomparable maximal elements (the letter V).
    pub fn vee() -> Self {
        FinPoset::new(3, &[(0, 1), (0, 2)]).expect("vee is a poset")
    }

    /// Two incomparable minimal elements below one maximum (V upside down).
    pub fn wedge() -> Self {
        FinPoset::new(3, &[(0, 2), (1, 2)]).expect("wedge is a poset")
    }
}

/// Finite bounded lattice: explicit join/meet tables plus bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinLattice {
    size: usize,
    join: OpTable,
    meet: OpTable,
    bot: usize,
    top: usize,
}

impl FinLattice {
    /// Builds and fully validates a lattice from its tables. Bounds are
    /// derived by folding. Validation is O(n³) (associativity).
    pub fn new(join: OpTable, meet: OpTable) -> Result<Self> {
        if join.size() != meet.size() {
            return Err(Error::Structure(format!(
                "join table size {} != meet table size {}",
                join.size(),
                meet.size()
            )));
        }
        let size = join.size();
        if size == 0 {
            return Err(Error::InvalidLattice("empty carrier".into()));
        }
        join.check_bounds()?;
        meet.check_bounds()?;
        let bot = (0..size).fold(0, |acc, x| meet.get(acc, x));
        let top = (0..size).fold(0, |acc, x| join.get(acc, x));
        let lat = FinLattice {
            size,
            join,
            meet,
            bot,
            top,
        };
        lat.validate()?;
        Ok(lat)
    }

    /// Constructor for tables known valid by construction (powersets,
    /// downset families, orders with computed bounds). Not validated.
    pub(crate) fn trusted(join: OpTable, meet: OpTable, bot: usize, top: usize) -> Self {
        let size = join.size();
        FinLattice {
            size,
            join,
            meet,
            bot,
            top,
        }
    }

    /// Checks every lattice invariant: commutativity, idempotence,
    /// absorption, associativity, bounds, and agreement of the two induced
    /// orders.
    pub fn validate(&self) -> Result<()> {
        let n = self.size;
        let fail = |msg: String| Err(Error::InvalidLattice(msg));
        for a in 0..n {
            if self.join.get(a, a) != a {
                return fail(format!("join not idempotent at {a}"));
            }
            if self.meet.get(a, a) != a {
                return fail(format!("meet not idempotent at {a}"));
            }
            if self.join.get(self.bot, a) != a {
                return fail(format!("bot is not a join identity at {a}"));
            }
            if self.meet.get(self.top, a) != a {
                return fail(format!("top is not a meet identity at {a}"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.join.get(a, b) != self.join.get(b, a) {
                    return fail(format!("join not commutative at ({a}, {b})"));
                }
                if self.meet.get(a, b) != self.meet.get(b, a) {
                    return fail(format!("meet not commutative at ({a}, {b})"));
                }
                if self.join.get(a, self.meet.get(a, b)) != a {
                    return fail(format!("absorption a∨(a∧b) fails at ({a}, {b})"));
                }
                if self.meet.get(a, self.join.get(a, b)) != a {
                    return fail(format!("absorption a∧(a∨b) fails at ({a}, {b})"));
                }
                let join_says = self.join.get(a, b) == b;
                let meet_says = self.meet.get(a, b) == a;
                if join_says != meet_says {
                    return fail(format!("induced orders disagree at ({a}, {b})"));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.join.get(a, self.join.get(b, c)) != self.join.get(self.join.get(a, b), c)
                    {
                        return fail(format!("join not associative at ({a}, {b}, {c})"));
                    }
                    if self.meet.get(a, self.meet.get(b, c)) != self.meet.get(self.meet.get(a, b), c)
                    {
                        return fail(format!("meet not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline(always)]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join.get(a, b)
    }

    #[inline(always)]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet.get(a, b)
    }

    #[inline(always)]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.join.get(a, b) == b
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// `⋁ s`, with `⋁ ∅ = ⊥`.
    pub fn big_join(&self, s: impl IntoIterator<Item = usize>) -> usize {
        s.into_iter().fold(self.bot, |acc, x| self.join.get(acc, x))
    }

    /// `⋀ s`, with `⋀ ∅ = ⊤`.
    pub fn big_meet(&self, s: impl IntoIterator<Item = usize>) -> usize {
        s.into_iter().fold(self.top, |acc, x| self.meet.get(acc, x))
    }

    /// The order `a ≤ b iff a ∨ b = b` as a standalone poset.
    pub fn induced_order(&self) -> FinPoset {
        let mut leq = vec![false; self.size * self.size];
        for a in 0..self.size {
            for b in 0..self.size {
                leq[a * self.size + b] = self.leq(a, b);
            }
        }
        FinPoset {
            size: self.size,
            leq,
        }
    }

    /// Exhaustive distributivity check; least witness triple on failure.
    pub fn is_distributive(&self) -> CheckReport {
        for a in 0..self.size {
            for b in 0..self.size {
                for c in 0..self.size {
                    let lhs = self.meet.get(a, self.join.get(b, c));
                    let rhs = self.join.get(self.meet.get(a, b), self.meet.get(a, c));
                    if lhs != rhs {
                        return CheckReport::fail(
                            "distributivity",
                            Witness::of(&[("a", a), ("b", b), ("c", c)]),
                        );
                    }
                }
            }
        }
        CheckReport::pass("distributivity")
    }

    /// Elements `x ≠ ⊥` with `x ≠ ⋁{y : y < x}`, ascending. On a finite
    /// lattice this is exactly the set of completely join-irreducible
    /// elements.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| {
                x != self.bot && {
                    let below = (0..self.size).filter(|&y| self.lt(y, x));
                    self.big_join(below) != x
                }
            })
            .collect()
    }

    /// `k ≠ ⊥` and `k ≤ v ∨ w` implies `k ≤ v` or `k ≤ w`.
    pub fn is_finitely_prime(&self, k: usize) -> Result<bool> {
        if k >= self.size {
            return Err(Error::IndexOutOfRange {
                index: k,
                size: self.size,
            });
        }
        if k == self.bot {
            return Ok(false);
        }
        for v in 0..self.size {
            for w in 0..self.size {
                if self.leq(k, self.join.get(v, w)) && !self.leq(k, v) && !self.leq(k, w) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn finitely_prime_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&k| self.is_finitely_prime(k).expect("index in range"))
            .collect()
    }

    /// For every finitely prime `k`: with `o = ⋁{b : b ≱ k}`, asserts
    /// `k ≰ o`. Holds on any lattice; a failure witness means the input is
    /// not a lattice.
    pub fn check_prime_splitting(&self) -> CheckReport {
        for k in self.finitely_prime_elements() {
            let o = self.big_join((0..self.size).filter(|&b| !self.leq(k, b)));
            if self.leq(k, o) {
                return CheckReport::fail("prime-splitting", Witness::of(&[("k", k), ("o", o)]));
            }
        }
        CheckReport::pass("prime-splitting")
    }

    /// Every finitely prime element is join-irreducible. Holds on any
    /// lattice.
    pub fn check_primes_join_irreducible(&self) -> CheckReport {
        let ji = self.join_irreducibles();
        for k in self.finitely_prime_elements() {
            if !ji.contains(&k) {
                return CheckReport::fail("primes-join-irreducible", Witness::of(&[("k", k)]));
            }
        }
        CheckReport::pass("primes-join-irreducible")
    }

    /// Lattice of all down-closed subsets of `p` under union/intersection.
    /// Elements are indexed by ascending subset bitmask.
    pub fn downsets(p: &FinPoset, max_poset: usize) -> Result<FinLattice> {
        if p.size() > max_poset {
            return Err(Error::Capacity {
                what: "poset",
                actual: p.size(),
                cap: max_poset,
                flag: "--max-poset",
            });
        }
        let n = p.size();
        let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
        let mut masks = Vec::new();
        'subset: for m in 0..=full {
            for x in 0..n {
                if m & (1 << x) != 0 {
                    for y in 0..n {
                        if p.leq(y, x) && m & (1 << y) == 0 {
                            continue 'subset;
                        }
                    }
                }
            }
            masks.push(m);
            if m == full {
                break;
            }
        }
        let rank: std::collections::HashMap<u64, usize> =
            masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let size = masks.len();
        let join = OpTable::from_fn(size, |a, b| rank[&(masks[a] | masks[b])]);
        let meet = OpTable::from_fn(size, |a, b| rank[&(masks[a] & masks[b])]);
        Ok(FinLattice::trusted(join, meet, rank[&0], rank[&full]))
    }

    /// Computes join/meet tables from an order, erroring when some pair has
    /// no least upper bound or greatest lower bound.
    pub fn from_order(p: &FinPoset) -> Result<FinLattice> {
        let n = p.size();
        if n == 0 {
            return Err(Error::InvalidLattice("empty carrier".into()));
        }
        let mut join = OpTable::from_fn(n, |_, _| 0);
        let mut meet = OpTable::from_fn(n, |_, _| 0);
        for a in 0..n {
            for b in 0..n {
                let ubs: Vec<usize> = (0..n).filter(|&c| p.leq(a, c) && p.leq(b, c)).collect();
                let lub = ubs.iter().copied().find(|&u| ubs.iter().all(|&c| p.leq(u, c)));
                match lub {
                    Some(u) => join.set(a, b, u),
                    None => {
                        return Err(Error::InvalidLattice(format!("no join for ({a}, {b})")))
                    }
                }
                let lbs: Vec<usize> = (0..n).filter(|&c| p.leq(c, a) && p.leq(c, b)).collect();
                let glb = lbs.iter().copied().find(|&u| lbs.iter().all(|&c| p.leq(c, u)));
                match glb {
                    Some(u) => meet.set(a, b, u),
                    None => {
                        return Err(Error::InvalidLattice(format!("no meet for ({a}, {b})")))
                    }
                }
            }
        }
        let bot = (0..n).fold(0, |acc, x| meet.get(acc, x));
        let top = (0..n).fold(0, |acc, x| join.get(acc, x));
        Ok(FinLattice::trusted(join, meet, bot, top))
    }

    /// `n`-element chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> FinLattice {
        assert!(n >= 1, "chain needs at least one element");
        FinLattice::trusted(
            OpTable::from_fn(n, |a, b| a.max(b)),
            OpTable::from_fn(n, |a, b| a.min(b)),
            0,
            n - 1,
        )
    }

    /// Powerset of `k` generators; element indices are subset bitmasks.
    pub fn boolean(k: u32) -> FinLattice {
        let n = 1usize << k;
        FinLattice::trusted(
            OpTable::from_fn(n, |a, b| a | b),
            OpTable::from_fn(n, |a, b| a & b),
            0,
            n - 1,
        )
    }

    /// The diamond with three atoms: the least non-distributive modular
    /// lattice. Indices: 0 = ⊥, 1..=3 atoms, 4 = ⊤.
    pub fn m3() -> FinLattice {
        let p = FinPoset::new(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
            .expect("m3 order");
        FinLattice::from_order(&p).expect("m3 is a lattice")
    }

    /// The pentagon: the least non-modular lattice.
    /// Indices: 0 = ⊥, 1 < 3 on one side, 2 on the other, 4 = ⊤.
    pub fn n5() -> FinLattice {
        let p = FinPoset::new(5, &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)]).expect("n5 order");
        FinLattice::from_order(&p).expect("n5 is a lattice")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn induced_order_of_two_chain() {
        let lat = FinLattice::chain(2);
        let p = lat.induced_order();
        assert_eq!(p.strict_pairs(), vec![(0, 1)]);
    }

    #[test]
    fn induced_order_of_diamond_has_five_strict_pairs() {
        // ⊥, a, b, ⊤ with a, b incomparable; count by table scan.
        let lat = FinLattice::boolean(2);
        let p = lat.induced_order();
        assert_eq!(p.strict_pairs().len(), 5);
    }

    #[test]
    fn induced_order_of_boolean_3_has_27_pairs() {
        // Oracle: subset containment pairs counted directly over bitmasks.
        let expected = {
            let mut count = 0;
            for x in 0u32..8 {
                for y in 0u32..8 {
                    if x & y == x {
                        count += 1;
                    }
                }
            }
            count
        };
        assert_eq!(expected, 27);
        let lat = FinLattice::boolean(3);
        let p = lat.induced_order();
        let total = (0..8)
            .flat_map(|a| (0..8).map(move |b| (a, b)))
            .filter(|&(a, b)| p.leq(a, b))
            .count();
        assert_eq!(total, 27);
    }

    #[test]
    fn distributivity_verdicts() {
        assert!(FinLattice::boolean(3).is_distributive().holds);
        let m3 = FinLattice::m3();
        let report = m3.is_distributive();
        assert!(!report.holds);
        // least witness is the first triple of distinct atoms
        assert_eq!(report.witness.unwrap(), Witness::of(&[("a", 1), ("b", 2), ("c", 3)]));
        assert!(!FinLattice::n5().is_distributive().holds);
    }

    #[test]
    fn join_irreducibles_of_boolean_are_atoms() {
        assert_eq!(FinLattice::boolean(3).join_irreducibles(), vec![1, 2, 4]);
    }

    #[test]
    fn join_irreducibles_of_diamond() {
        // 4-element lattice ⊥ < x, y < ⊤ with x, y incomparable: exactly x, y.
        assert_eq!(FinLattice::boolean(2).join_irreducibles(), vec![1, 2]);
    }

    #[test]
    fn join_irreducibles_of_chain() {
        // every non-bottom element of a chain: x ≠ ⋁{y < x} = predecessor
        assert_eq!(FinLattice::chain(5).join_irreducibles(), vec![1, 2, 3, 4]);
    }

    /// Second route: x is join-irreducible iff x ≠ ⊥ and x = a∨b forces
    /// x ∈ {a, b}. Used as an independent oracle.
    fn join_irreducibles_by_pairs(lat: &FinLattice) -> Vec<usize> {
        (0..lat.size())
            .filter(|&x| {
                x != lat.bot()
                    && (0..lat.size()).all(|a| {
                        (0..lat.size()).all(|b| lat.join(a, b) != x || a == x || b == x)
                    })
            })
            .collect()
    }

    #[test]
    fn join_irreducible_oracles_agree() {
        for lat in [
            FinLattice::chain(1),
            FinLattice::chain(6),
            FinLattice::boolean(3),
            FinLattice::m3(),
            FinLattice::n5(),
            FinLattice::downsets(&FinPoset::vee(), 10).unwrap(),
            FinLattice::downsets(&FinPoset::wedge(), 10).unwrap(),
        ] {
            assert_eq!(lat.join_irreducibles(), join_irreducibles_by_pairs(&lat));
        }
    }

    #[test]
    fn finitely_prime_basics() {
        let two = FinLattice::chain(2);
        assert!(!two.is_finitely_prime(0).unwrap()); // bot is never prime
        assert!(two.is_finitely_prime(1).unwrap());
        let m3 = FinLattice::m3();
        assert!(!m3.is_finitely_prime(4).unwrap()); // ⊤ ≤ a∨b for distinct atoms
        assert!(m3.is_finitely_prime(1).unwrap());
        assert!(matches!(
            m3.is_finitely_prime(99),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn primes_equal_join_irreducibles_on_distributive() {
        for lat in [
            FinLattice::boolean(3),
            FinLattice::chain(5),
            FinLattice::downsets(&FinPoset::vee(), 10).unwrap(),
            FinLattice::downsets(&FinPoset::wedge(), 10).unwrap(),
        ] {
            assert!(lat.is_distributive().holds);
            assert_eq!(lat.finitely_prime_elements(), lat.join_irreducibles());
        }
    }

    #[test]
    fn big_join_and_big_meet_of_empty_set() {
        let lat = FinLattice::boolean(3);
        assert_eq!(lat.big_join([]), lat.bot());
        assert_eq!(lat.big_meet([]), lat.top());
        assert_eq!(lat.big_join([1, 2, 4]), lat.top());
    }

    #[test]
    fn prime_splitting_holds() {
        for lat in [
            FinLattice::chain(2),
            FinLattice::boolean(2),
            FinLattice::n5(),
            FinLattice::m3(),
        ] {
            assert!(lat.check_prime_splitting().holds, "failed on {lat:?}");
        }
        // direct computation of o per atom of the 4-element Boolean algebra
        let b2 = FinLattice::boolean(2);
        for atom in [1usize, 2] {
            let o = b2.big_join((0..4).filter(|&b| !b2.leq(atom, b)));
            assert_eq!(o, 3 - atom); // the other atom
            assert!(!b2.leq(atom, o));
        }
    }

    #[test]
    fn primes_are_join_irreducible() {
        for lat in [
            FinLattice::boolean(3),
            FinLattice::m3(),
            FinLattice::n5(),
            FinLattice::chain(8),
        ] {
            assert!(lat.check_primes_join_irreducible().holds);
        }
    }

    #[test]
    fn downsets_of_antichain_is_boolean() {
        let lat = FinLattice::downsets(&FinPoset::antichain(2), 10).unwrap();
        assert_eq!(lat.size(), 4);
        assert!(lat.is_distributive().holds);
        assert_eq!(lat.join_irreducibles().len(), 2);
    }

    #[test]
    fn downsets_of_chain_is_chain() {
        let lat = FinLattice::downsets(&FinPoset::chain(3), 10).unwrap();
        assert_eq!(lat.size(), 4);
        for a in 0..4 {
            for b in 0..4 {
                assert!(lat.leq(a, b) || lat.leq(b, a), "downsets of a chain form a chain");
            }
        }
    }

    #[test]
    fn downsets_of_vee_and_wedge() {
        // Enumeration oracle: down-closed subsets listed by hand.
        // vee (0 < 1, 0 < 2): {}, {0}, {0,1}, {0,2}, {0,1,2}
        let vee = FinLattice::downsets(&FinPoset::vee(), 10).unwrap();
        assert_eq!(vee.size(), 5);
        // wedge (0 < 2, 1 < 2): {}, {0}, {1}, {0,1}, {0,1,2}
        let wedge = FinLattice::downsets(&FinPoset::wedge(), 10).unwrap();
        assert_eq!(wedge.size(), 5);
        assert!(vee.is_distributive().holds);
        assert!(wedge.is_distributive().holds);
    }

    #[test]
    fn downsets_capacity_error_names_flag() {
        let err = FinLattice::downsets(&FinPoset::antichain(11), 10).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("--max-poset"), "{msg}");
    }

    #[test]
    fn from_order_rejects_non_lattice() {
        // the two maximal elements of vee have no common upper bound
        assert!(FinLattice::from_order(&FinPoset::vee()).is_err());
    }

    #[test]
    fn degenerate_single_element_lattice() {
        let one = FinLattice::chain(1);
        assert_eq!(one.bot(), one.top());
        assert!(one.join_irreducibles().is_empty());
        assert!(one.check_prime_splitting().holds);
        assert!(one.check_primes_join_irreducible().holds);
    }

    #[test]
    fn validation_rejects_corrupted_tables() {
        let good = FinLattice::chain(3);
        assert!(good.validate().is_ok());
        let mut join = OpTable::from_fn(3, |a, b| a.max(b));
        join.set(0, 1, 0); // breaks commutativity with (1, 0)
        let meet = OpTable::from_fn(3, |a, b| a.min(b));
        assert!(FinLattice::new(join, meet).is_err());

        let mut join = OpTable::from_fn(3, |a, b| a.max(b));
        join.set(1, 2, 9); // non-index entry
        let meet = OpTable::from_fn(3, |a, b| a.min(b));
        assert!(matches!(
            FinLattice::new(join, meet),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn poset_rejects_antisymmetry_violation() {
        assert!(FinPoset::new(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn lub_glb_against_induced_order() {
        // joins/meets are least upper / greatest lower bounds, exhaustively
        for lat in [FinLattice::boolean(3), FinLattice::m3(), FinLattice::n5()] {
            let p = lat.induced_order();
            for a in 0..lat.size() {
                for b in 0..lat.size() {
                    let j = lat.join(a, b);
                    assert!(p.leq(a, j) && p.leq(b, j));
                    for c in 0..lat.size() {
                        if p.leq(a, c) && p.leq(b, c) {
                            assert!(p.leq(j, c));
                        }
                    }
                    let m = lat.meet(a, b);
                    assert!(p.leq(m, a) && p.leq(m, b));
                    for c in 0..lat.size() {
                        if p.leq(c, a) && p.leq(c, b) {
                            assert!(p.leq(c, m));
                        }
                    }
                }
            }
        }
    }
}
