//! Finite groups as dense Cayley tables, plus the subgroup machinery the
//! classification needs: full subgroup enumeration, conjugacy classes of
//! subgroups, and normalizers.
//!
//! Elements are indices `0..n`. Generated groups (cyclic, dihedral, symmetric,
//! products, permutation closures) always put the identity at index 0;
//! explicit tables may carry it elsewhere. Permutations compose left to
//! right: `mul(a, b)` applies `a` first, then `b`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Orders above this are rejected at construction. Dense tables and the
/// downstream cochain tables make larger groups impractical anyway.
pub const MAX_ORDER: usize = 720;

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major `order × order` table: `mul[a * order + b] = a · b`.
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates and wraps an explicit Cayley table.
    ///
    /// Checks that every row and column is a permutation, that a two-sided
    /// identity and two-sided inverses exist, and that the law is associative
    /// (exhaustively, all `n³` triples).
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::UnsupportedOrder(n));
        }
        let mut mul = Vec::with_capacity(n * n);
        for row in table {
            if row.len() != n {
                return Err(Error::UnsupportedOrder(row.len()));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::ElementOutOfRange { element: v, order: n });
                }
                mul.push(v);
            }
        }
        Self::from_flat_table(n, mul)
    }

    fn from_flat_table(n: usize, mul: Vec<usize>) -> Result<Self> {
        debug_assert_eq!(mul.len(), n * n);
        // Rows and columns must be permutations.
        let mut seen = vec![false; n];
        for r in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for c in 0..n {
                let v = mul[r * n + c];
                if seen[v] {
                    return Err(Error::RowNotPermutation(r));
                }
                seen[v] = true;
            }
        }
        for c in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for r in 0..n {
                let v = mul[r * n + c];
                if seen[v] {
                    return Err(Error::ColNotPermutation(c));
                }
                seen[v] = true;
            }
        }
        // Two-sided identity.
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul[e * n + a] == a && mul[a * n + e] == a))
            .ok_or(Error::MissingIdentity)?;
        // Two-sided inverses.
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            let i = (0..n)
                .find(|&b| mul[a * n + b] == identity && mul[b * n + a] == identity)
                .ok_or(Error::MissingInverse(a))?;
            inv[a] = i;
        }
        // Associativity, exhaustively.
        for a in 0..n {
            for b in 0..n {
                let ab = mul[a * n + b];
                for c in 0..n {
                    if mul[ab * n + c] != mul[a * n + mul[b * n + c]] {
                        return Err(Error::NonAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(FiniteGroup { order: n, mul, identity, inv })
    }

    /// Cyclic group of order `n`: `mul[a][b] = (a + b) mod n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::UnsupportedOrder(n));
        }
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push((a + b) % n);
            }
        }
        Self::from_flat_table(n, mul)
    }

    /// Dihedral group of order `2n` (symmetries of the regular `n`-gon).
    ///
    /// Element `i + n·j` is the rotation by `i` composed with `j` flips;
    /// the identity is element 0.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 || 2 * n > MAX_ORDER {
            return Err(Error::UnsupportedOrder(2 * n));
        }
        let order = 2 * n;
        let mut mul = Vec::with_capacity(order * order);
        for x in 0..order {
            let (i1, j1) = (x % n, x / n);
            for y in 0..order {
                let (i2, j2) = (y % n, y / n);
                let i = if j1 == 0 { (i1 + i2) % n } else { (i1 + n - i2 % n) % n };
                let j = (j1 + j2) % 2;
                mul.push(i + n * j);
            }
        }
        Self::from_flat_table(order, mul)
    }

    /// Symmetric group on `n ≤ 6` symbols.
    ///
    /// Elements are the permutations of `0..n` in lexicographic order of
    /// their image tuples, so the identity is element 0. Composition is
    /// left to right: `(a·b)(x) = b(a(x))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 6 {
            return Err(Error::UnsupportedOrder(n));
        }
        let perms = permutations_lex(n);
        let order = perms.len();
        let index_of = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        let mut mul = Vec::with_capacity(order * order);
        for a in &perms {
            for b in &perms {
                let composed: Vec<usize> = (0..n).map(|x| b[a[x]]).collect();
                mul.push(index_of(&composed));
            }
        }
        Self::from_flat_table(order, mul)
    }

    /// Direct product; element `ia·|b| + ib`, identity 0.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self> {
        let n = a.order * b.order;
        if n > MAX_ORDER {
            return Err(Error::UnsupportedOrder(n));
        }
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            let (xa, xb) = (x / b.order, x % b.order);
            for y in 0..n {
                let (ya, yb) = (y / b.order, y % b.order);
                mul.push(a.mul(xa, ya) * b.order + b.mul(xb, yb));
            }
        }
        let g = Self::from_flat_table(n, mul)?;
        debug_assert_eq!(g.identity, a.identity * b.order + b.identity);
        Ok(g)
    }

    /// Closure of permutation generators on `degree` points.
    ///
    /// Each generator is its image list. The returned group is the generated
    /// permutation group, elements numbered breadth-first from the identity
    /// (so the identity is element 0), composing left to right.
    pub fn from_permutation_generators(degree: usize, gens: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::UnsupportedOrder(0));
        }
        for g in gens {
            if g.len() != degree {
                return Err(Error::ElementOutOfRange { element: g.len(), order: degree });
            }
            let mut seen = vec![false; degree];
            for &v in g {
                if v >= degree || seen[v] {
                    return Err(Error::RowNotPermutation(v.min(degree - 1)));
                }
                seen[v] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut lookup: BTreeSet<Vec<usize>> = BTreeSet::new();
        lookup.insert(identity);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for g in gens {
                // current then g
                let next: Vec<usize> = (0..degree).map(|x| g[current[x]]).collect();
                if lookup.insert(next.clone()) {
                    if elements.len() >= MAX_ORDER {
                        return Err(Error::UnsupportedOrder(elements.len() + 1));
                    }
                    elements.push(next);
                }
            }
        }
        let order = elements.len();
        let index_of = |p: &[usize]| elements.iter().position(|q| q == p).unwrap();
        let mut mul = Vec::with_capacity(order * order);
        for a in &elements {
            for b in &elements {
                let composed: Vec<usize> = (0..degree).map(|x| b[a[x]]).collect();
                mul.push(index_of(&composed));
            }
        }
        Self::from_flat_table(order, mul)
    }

    /// Trivial group.
    pub fn trivial() -> Self {
        FiniteGroup { order: 1, mul: vec![0], identity: 0, inv: vec![0] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g · h · g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Validates `elements` as a subgroup and wraps it.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut elems: Vec<usize> = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        for &e in &elems {
            if e >= self.order {
                return Err(Error::ElementOutOfRange { element: e, order: self.order });
            }
        }
        if elems.binary_search(&self.identity).is_err() {
            return Err(Error::NotSubgroup);
        }
        for &a in &elems {
            if elems.binary_search(&self.inv(a)).is_err() {
                return Err(Error::NotSubgroup);
            }
            for &b in &elems {
                if elems.binary_search(&self.mul(a, b)).is_err() {
                    return Err(Error::NotSubgroup);
                }
            }
        }
        // Lagrange; unreachable for a genuinely closed set, kept as a guard.
        assert_eq!(self.order % elems.len(), 0, "Lagrange violated");
        Ok(Subgroup { elements: elems, parent_order: self.order })
    }

    /// The whole group as a subgroup of itself.
    pub fn whole_subgroup(&self) -> Subgroup {
        Subgroup { elements: (0..self.order).collect(), parent_order: self.order }
    }

    /// The trivial subgroup.
    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { elements: vec![self.identity], parent_order: self.order }
    }

    /// Closure of a set of elements inside this group.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Result<Subgroup> {
        for &g in gens {
            if g >= self.order {
                return Err(Error::ElementOutOfRange { element: g, order: self.order });
            }
        }
        let mut in_set = vec![false; self.order];
        in_set[self.identity] = true;
        let mut stack: Vec<usize> = vec![self.identity];
        for &g in gens {
            if !in_set[g] {
                in_set[g] = true;
                stack.push(g);
            }
        }
        let mut members = stack.clone();
        while let Some(x) = stack.pop() {
            for i in 0..members.len() {
                let m = members[i];
                for p in [self.mul(x, m), self.mul(m, x)] {
                    if !in_set[p] {
                        in_set[p] = true;
                        stack.push(p);
                        members.push(p);
                    }
                }
            }
        }
        members.sort_unstable();
        Ok(Subgroup { elements: members, parent_order: self.order })
    }
}

/// A subgroup, stored as the sorted list of its parent-element indices.
///
/// Subgroups carry no back-reference to the parent; operations take the
/// parent explicitly, which keeps everything immutable and freely shareable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
    parent_order: usize,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, element: usize) -> bool {
        self.elements.binary_search(&element).is_ok()
    }

    /// Position of a parent element within this subgroup's element list.
    pub fn index_of(&self, element: usize) -> Option<usize> {
        self.elements.binary_search(&element).ok()
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent_order
    }

    /// `g · H · g⁻¹` as a subgroup.
    pub fn conjugated(&self, group: &FiniteGroup, g: usize) -> Subgroup {
        let mut elements: Vec<usize> =
            self.elements.iter().map(|&h| group.conjugate(g, h)).collect();
        elements.sort_unstable();
        Subgroup { elements, parent_order: self.parent_order }
    }

    /// Canonical ordering key: order first, then the element list.
    fn sort_key(&self) -> (usize, &[usize]) {
        (self.elements.len(), &self.elements)
    }
}

/// Every subgroup of `G`, each exactly once, sorted by order and then
/// lexicographically by element list.
///
/// Uses cyclic extension: grow known subgroups by one generator at a time
/// and close, rather than scanning the power set.
pub fn all_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut known: BTreeSet<Vec<usize>> = BTreeSet::new();
    known.insert(vec![group.identity()]);
    let mut frontier: Vec<Vec<usize>> = vec![vec![group.identity()]];
    while let Some(base) = frontier.pop() {
        for g in 0..group.order() {
            if base.binary_search(&g).is_ok() {
                continue;
            }
            let mut gens = base.clone();
            gens.push(g);
            let sub = group.generated_subgroup(&gens).expect("closure of valid elements");
            if known.insert(sub.elements.clone()) {
                frontier.push(sub.elements);
            }
        }
    }
    let mut subs: Vec<Subgroup> = known
        .into_iter()
        .map(|elements| Subgroup { elements, parent_order: group.order() })
        .collect();
    subs.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    subs
}

/// Partition of [`all_subgroups`] into conjugation orbits.
///
/// Each entry is `(representative, class members)`; the representative is the
/// minimal member in the canonical subgroup ordering, and classes are sorted
/// by representative.
pub fn subgroup_conjugacy_classes(group: &FiniteGroup) -> Vec<(Subgroup, Vec<Subgroup>)> {
    let subs = all_subgroups(group);
    let mut assigned = vec![false; subs.len()];
    let position = |elements: &[usize], subs: &[Subgroup]| -> usize {
        subs.iter().position(|s| s.elements == elements).expect("conjugate of a subgroup")
    };
    let mut classes = Vec::new();
    for i in 0..subs.len() {
        if assigned[i] {
            continue;
        }
        let mut member_ids: BTreeSet<usize> = BTreeSet::new();
        for g in 0..group.order() {
            let conj = subs[i].conjugated(group, g);
            member_ids.insert(position(conj.elements(), &subs));
        }
        let members: Vec<Subgroup> = member_ids.iter().map(|&j| subs[j].clone()).collect();
        for &j in &member_ids {
            assigned[j] = true;
        }
        classes.push((members[0].clone(), members));
    }
    classes.sort_by(|a, b| a.0.sort_key().cmp(&b.0.sort_key()));
    classes
}

/// `N_G(H) = { g : g H g⁻¹ = H }`.
pub fn normalizer(group: &FiniteGroup, sub: &Subgroup) -> Result<Subgroup> {
    // Reject sets that are not genuine subgroups of this group.
    let sub = group.subgroup(sub.elements())?;
    let elements: Vec<usize> = (0..group.order())
        .filter(|&g| sub.conjugated(group, g).elements == sub.elements)
        .collect();
    let norm = Subgroup { elements, parent_order: group.order() };
    debug_assert!(sub.elements.iter().all(|&h| norm.contains(h)));
    Ok(norm)
}

fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}
