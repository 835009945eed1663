//! Normalized group cochains valued in `Z/M`.
//!
//! A value `v` at modulus `M` stands for the root of unity `e^{2πi v/M}`, so
//! cochains multiply by adding exponents and the whole calculus is exact.
//! Cochains are *normalized*: the value is 0 whenever any argument is the
//! identity. The domain of a cochain is always a subgroup of some ambient
//! group, stored as the sorted list of parent-element indices; operations
//! take the ambient group explicitly.
//!
//! Degree-1..3 cochains are what the classification manipulates; degree 4
//! only ever shows up as the coboundary of a degree-3 cochain.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// Materializing a coboundary above this many cells is refused.
const COBOUNDARY_CELL_CAP: u64 = 1 << 24;

/// A normalized cochain `domain^degree → Z/M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    modulus: u64,
    /// Sorted parent-element indices of the domain subgroup.
    domain: Vec<usize>,
    /// Dense row-major table over local indices, length `|domain|^degree`.
    values: Vec<u64>,
}

/// Local multiplication tables for a cochain domain, built once per operation.
pub(crate) struct LocalTables {
    pub(crate) size: usize,
    pub(crate) mul: Vec<usize>,
    pub(crate) identity: usize,
}

impl LocalTables {
    pub(crate) fn new(group: &FiniteGroup, domain: &[usize]) -> Result<Self> {
        let size = domain.len();
        let local_of = |e: usize| -> Result<usize> {
            domain.binary_search(&e).map_err(|_| Error::NotSubgroup)
        };
        let mut mul = Vec::with_capacity(size * size);
        for &a in domain {
            for &b in domain {
                mul.push(local_of(group.mul(a, b))?);
            }
        }
        let identity = local_of(group.identity())?;
        Ok(LocalTables { size, mul, identity })
    }

    #[inline]
    pub(crate) fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }
}

impl Cochain {
    /// The zero cochain on a subgroup.
    pub fn zero(sub: &Subgroup, degree: usize, modulus: u64) -> Result<Self> {
        check_degree_modulus(degree, modulus)?;
        let s = sub.len();
        Ok(Cochain {
            degree,
            modulus,
            domain: sub.elements().to_vec(),
            values: vec![0; s.pow(degree as u32)],
        })
    }

    /// The zero cochain on the whole group.
    pub fn zero_on_group(group: &FiniteGroup, degree: usize, modulus: u64) -> Result<Self> {
        Self::zero(&group.whole_subgroup(), degree, modulus)
    }

    /// Wraps a dense value table, validating range and normalization.
    pub fn from_dense(
        group: &FiniteGroup,
        sub: &Subgroup,
        degree: usize,
        modulus: u64,
        values: Vec<u64>,
    ) -> Result<Self> {
        check_degree_modulus(degree, modulus)?;
        let s = sub.len();
        if values.len() != s.pow(degree as u32) {
            return Err(Error::DimensionMismatch);
        }
        let c = Cochain { degree, modulus, domain: sub.elements().to_vec(), values };
        c.validate(group)?;
        Ok(c)
    }

    /// Builds from sparse `(parent-element tuple, value)` entries; omitted
    /// tuples are zero.
    pub fn from_sparse(
        group: &FiniteGroup,
        sub: &Subgroup,
        degree: usize,
        modulus: u64,
        entries: &[(Vec<usize>, u64)],
    ) -> Result<Self> {
        let mut c = Self::zero(sub, degree, modulus)?;
        for (tuple, value) in entries {
            if tuple.len() != degree {
                return Err(Error::DimensionMismatch);
            }
            let flat = c.flat_index_of(tuple)?;
            c.values[flat] = value % modulus;
        }
        c.validate(group)?;
        Ok(c)
    }

    /// As [`Cochain::from_dense`] but without the normalization check.
    ///
    /// Exists so that deliberately broken tables can be fed to the datum
    /// verifier, which re-checks normalization itself.
    pub fn from_dense_unchecked(
        sub: &Subgroup,
        degree: usize,
        modulus: u64,
        values: Vec<u64>,
    ) -> Result<Self> {
        check_degree_modulus(degree, modulus)?;
        let s = sub.len();
        if values.len() != s.pow(degree as u32) {
            return Err(Error::DimensionMismatch);
        }
        let values = values.into_iter().map(|v| v % modulus).collect();
        Ok(Cochain { degree, modulus, domain: sub.elements().to_vec(), values })
    }

    fn validate(&self, group: &FiniteGroup) -> Result<()> {
        let local = LocalTables::new(group, &self.domain)?;
        for (flat, &v) in self.values.iter().enumerate() {
            if v >= self.modulus {
                return Err(Error::NotNormalized(flat));
            }
            if v != 0 && self.tuple_of_flat(flat).contains(&local.identity) {
                return Err(Error::NotNormalized(flat));
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Sorted parent-element indices of the domain.
    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn domain_size(&self) -> usize {
        self.domain.len()
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// True when every value vanishes on identity-containing tuples.
    pub fn is_normalized(&self, group: &FiniteGroup) -> bool {
        self.validate(group).is_ok()
    }

    fn local_index_of(&self, element: usize) -> Result<usize> {
        self.domain.binary_search(&element).map_err(|_| Error::DomainMismatch)
    }

    fn flat_index_of(&self, tuple: &[usize]) -> Result<usize> {
        let s = self.domain.len();
        let mut flat = 0;
        for &e in tuple {
            flat = flat * s + self.local_index_of(e)?;
        }
        Ok(flat)
    }

    fn tuple_of_flat(&self, mut flat: usize) -> Vec<usize> {
        let s = self.domain.len();
        let mut tuple = vec![0usize; self.degree];
        for slot in tuple.iter_mut().rev() {
            *slot = flat % s;
            flat /= s;
        }
        tuple
    }

    /// Value at a tuple of parent elements.
    pub fn get(&self, tuple: &[usize]) -> Result<u64> {
        if tuple.len() != self.degree {
            return Err(Error::DimensionMismatch);
        }
        Ok(self.values[self.flat_index_of(tuple)?])
    }

    #[inline]
    fn get_local(&self, tuple: &[usize]) -> u64 {
        let s = self.domain.len();
        let mut flat = 0;
        for &t in tuple {
            flat = flat * s + t;
        }
        self.values[flat]
    }

    /// The bar-resolution coboundary, one degree up.
    ///
    /// Additive alternating convention: for a 1-cochain,
    /// `(dτ)(h,l) = τ(h) − τ(hl) + τ(l)`; for a 2-cochain,
    /// `(dβ)(g,h,l) = β(h,l) − β(gh,l) + β(g,hl) − β(g,h)`; degree 3 is the
    /// five-term alternating sum. The output is normalized.
    pub fn coboundary(&self, group: &FiniteGroup) -> Result<Cochain> {
        if self.degree >= 4 {
            return Err(Error::TopDegree);
        }
        let s = self.domain.len();
        let out_degree = self.degree + 1;
        let cells = (s as u64).pow(out_degree as u32);
        if cells > COBOUNDARY_CELL_CAP {
            return Err(Error::ResourceCap { required: cells, cap: COBOUNDARY_CELL_CAP });
        }
        let local = LocalTables::new(group, &self.domain)?;
        let m = self.modulus;
        let mut values = vec![0u64; cells as usize];
        let mut tuple = vec![0usize; out_degree];
        for (flat, slot) in values.iter_mut().enumerate() {
            decode_tuple(flat, s, &mut tuple);
            *slot = coboundary_at(self, &local, &tuple, m);
        }
        let out = Cochain { degree: out_degree, modulus: m, domain: self.domain.clone(), values };
        debug_assert!(out.validate(group).is_ok());
        Ok(out)
    }

    /// True iff the coboundary vanishes identically (and the cochain is
    /// normalized, which the type already guarantees).
    ///
    /// For degree-3 inputs the degree-4 values are only streamed, never
    /// materialized.
    pub fn is_cocycle(&self, group: &FiniteGroup) -> bool {
        assert!(self.degree <= 3, "cocycle test only defined up to degree 3");
        if self.validate(group).is_err() {
            return false;
        }
        let s = self.domain.len();
        let local = match LocalTables::new(group, &self.domain) {
            Ok(l) => l,
            Err(_) => return false,
        };
        let out_degree = self.degree + 1;
        let total = (s as u64).pow(out_degree as u32);
        let mut tuple = vec![0usize; out_degree];
        for flat in 0..total {
            decode_tuple(flat as usize, s, &mut tuple);
            if coboundary_at(self, &local, &tuple, self.modulus) != 0 {
                return false;
            }
        }
        true
    }

    /// Restriction to a subgroup of the domain, re-indexed by the subgroup's
    /// element order. Modulus unchanged.
    pub fn restrict(&self, group: &FiniteGroup, sub: &Subgroup) -> Result<Cochain> {
        for &e in sub.elements() {
            if self.domain.binary_search(&e).is_err() {
                return Err(Error::NotSubgroup);
            }
        }
        let s = sub.len();
        let mut values = vec![0u64; s.pow(self.degree as u32)];
        let mut tuple = vec![0usize; self.degree];
        let mut parent_tuple = vec![0usize; self.degree];
        for (flat, slot) in values.iter_mut().enumerate() {
            decode_tuple(flat, s, &mut tuple);
            for (p, &t) in parent_tuple.iter_mut().zip(&tuple) {
                *p = sub.elements()[t];
            }
            *slot = self.get(&parent_tuple)?;
        }
        let out = Cochain {
            degree: self.degree,
            modulus: self.modulus,
            domain: sub.elements().to_vec(),
            values,
        };
        debug_assert!(out.validate(group).is_ok());
        Ok(out)
    }

    /// Conjugation: a cochain on `L` becomes a cochain on `g⁻¹Lg`, with
    /// `ξ^g(h, …) = ξ(g h g⁻¹, …)`. Degree and modulus are preserved.
    pub fn conjugate_by(&self, group: &FiniteGroup, g: usize) -> Result<Cochain> {
        if g >= group.order() {
            return Err(Error::ElementOutOfRange { element: g, order: group.order() });
        }
        let g_inv = group.inv(g);
        let mut new_domain: Vec<usize> =
            self.domain.iter().map(|&h| group.conjugate(g_inv, h)).collect();
        new_domain.sort_unstable();
        let s = new_domain.len();
        let mut values = vec![0u64; s.pow(self.degree as u32)];
        let mut tuple = vec![0usize; self.degree];
        let mut source = vec![0usize; self.degree];
        for (flat, slot) in values.iter_mut().enumerate() {
            decode_tuple(flat, s, &mut tuple);
            for (src, &t) in source.iter_mut().zip(&tuple) {
                *src = group.conjugate(g, new_domain[t]);
            }
            // The conjugated tuple lands back in the stored domain by
            // construction; anything else is a corrupted cochain.
            *slot = self.get(&source)?;
        }
        let out = Cochain {
            degree: self.degree,
            modulus: self.modulus,
            domain: new_domain,
            values,
        };
        debug_assert!(out.validate(group).is_ok());
        Ok(out)
    }

    /// The standard generator of degree-3 classes on the cyclic group:
    /// `ω_q(a,b,c) = q · a · ⌊(b+c)/n⌋ · (M/n) mod M`, on `cyclic(n)` at
    /// modulus `M` with `n | M`. Verified to be a normalized cocycle at
    /// construction.
    pub fn cyclic_three_cocycle(n: usize, q: u64, modulus: u64) -> Result<Cochain> {
        if n == 0 || modulus == 0 || modulus % (n as u64) != 0 {
            return Err(Error::ModulusNotDivisible { n: n as u64, modulus });
        }
        let group = FiniteGroup::cyclic(n)?;
        let step = modulus / n as u64;
        let mut values = vec![0u64; n * n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let carry = ((b + c) / n) as u64;
                    values[(a * n + b) * n + c] = (q % modulus * a as u64 % modulus * carry
                        % modulus)
                        * step
                        % modulus;
                }
            }
        }
        let out = Cochain { degree: 3, modulus, domain: (0..n).collect(), values };
        out.validate(&group)?;
        assert!(out.is_cocycle(&group), "cyclic generator must be a cocycle");
        Ok(out)
    }

    /// Pullback along a surjective homomorphism `projection: big → small`,
    /// checked exhaustively. The receiver must live on the whole small group.
    pub fn inflate_along(
        &self,
        big: &FiniteGroup,
        small: &FiniteGroup,
        projection: &[usize],
    ) -> Result<Cochain> {
        if self.domain.len() != small.order() {
            return Err(Error::DomainMismatch);
        }
        if projection.len() != big.order() {
            return Err(Error::DimensionMismatch);
        }
        for &p in projection {
            if p >= small.order() {
                return Err(Error::ElementOutOfRange { element: p, order: small.order() });
            }
        }
        for a in 0..big.order() {
            for b in 0..big.order() {
                if projection[big.mul(a, b)] != small.mul(projection[a], projection[b]) {
                    return Err(Error::NotHomomorphism(a, b));
                }
            }
        }
        if let Some(missing) = (0..small.order()).find(|t| !projection.contains(t)) {
            return Err(Error::NotSurjective(missing));
        }
        let n = big.order();
        let mut values = vec![0u64; n.pow(self.degree as u32)];
        let mut tuple = vec![0usize; self.degree];
        let mut image = vec![0usize; self.degree];
        for (flat, slot) in values.iter_mut().enumerate() {
            decode_tuple(flat, n, &mut tuple);
            for (img, &t) in image.iter_mut().zip(&tuple) {
                *img = projection[t];
            }
            *slot = self.get(&image)?;
        }
        let out = Cochain {
            degree: self.degree,
            modulus: self.modulus,
            domain: (0..n).collect(),
            values,
        };
        debug_assert!(out.validate(big).is_ok());
        Ok(out)
    }

    /// Pointwise sum; domains and moduli must agree.
    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.combine(other, |a, b, m| (a + b) % m)
    }

    /// Pointwise difference.
    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.combine(other, |a, b, m| (a + m - b) % m)
    }

    fn combine(&self, other: &Cochain, op: fn(u64, u64, u64) -> u64) -> Result<Cochain> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        if self.degree != other.degree || self.domain != other.domain {
            return Err(Error::DomainMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| op(a, b, self.modulus))
            .collect();
        Ok(Cochain {
            degree: self.degree,
            modulus: self.modulus,
            domain: self.domain.clone(),
            values,
        })
    }

    /// Pointwise scalar multiple.
    pub fn scaled(&self, k: u64) -> Cochain {
        let m = self.modulus;
        Cochain {
            degree: self.degree,
            modulus: m,
            domain: self.domain.clone(),
            values: self
                .values
                .iter()
                .map(|&v| (v as u128 * k as u128 % m as u128) as u64)
                .collect(),
        }
    }

    /// Pointwise negation.
    pub fn negate(&self) -> Cochain {
        let m = self.modulus;
        Cochain {
            degree: self.degree,
            modulus: m,
            domain: self.domain.clone(),
            values: self.values.iter().map(|&v| (m - v) % m).collect(),
        }
    }

    /// Re-expresses the same roots of unity at a larger modulus
    /// (`new = old · k` scales every value by `k`).
    pub fn embed(&self, new_modulus: u64) -> Result<Cochain> {
        if new_modulus == 0 || new_modulus % self.modulus != 0 {
            return Err(Error::NotEmbeddable { from: self.modulus, into: new_modulus });
        }
        let k = new_modulus / self.modulus;
        Ok(Cochain {
            degree: self.degree,
            modulus: new_modulus,
            domain: self.domain.clone(),
            values: self.values.iter().map(|&v| v * k).collect(),
        })
    }

    /// Order of the cyclic group generated by the values inside `Z/M`
    /// (1 for the zero cochain).
    pub fn value_order(&self) -> u64 {
        let g = self.values.iter().fold(self.modulus, |acc, &v| gcd(acc, v));
        self.modulus / g
    }

    /// The same phases at the smallest possible modulus.
    pub fn canonicalized(&self) -> Cochain {
        let order = self.value_order().max(1);
        let k = self.modulus / order;
        Cochain {
            degree: self.degree,
            modulus: order,
            domain: self.domain.clone(),
            values: self.values.iter().map(|&v| v / k).collect(),
        }
    }

    /// Phase equality: same domain, same roots of unity (compared at the
    /// least common modulus).
    pub fn same_phase(&self, other: &Cochain) -> bool {
        if self.degree != other.degree || self.domain != other.domain {
            return false;
        }
        let l = lcm(self.modulus, other.modulus);
        let (ka, kb) = (l / self.modulus, l / other.modulus);
        self.values.iter().zip(&other.values).all(|(&a, &b)| a * ka == b * kb)
    }
}

/// The 2-cochain measuring how conjugation interacts with the associator:
/// `Ω_g(h,l) = ω(g,h,l) + ω(ghg⁻¹, glg⁻¹, g) − ω(ghg⁻¹, g, l)` on `H`.
/// Its coboundary is `ω − ω^g` restricted to `H`, which is what lets the
/// twisted conjugation action preserve the coboundary condition.
pub fn conjugation_twist(
    omega: &Cochain,
    group: &FiniteGroup,
    g: usize,
    sub: &Subgroup,
) -> Result<Cochain> {
    if omega.degree() != 3 {
        return Err(Error::BadDegree { expected: "3", found: omega.degree() });
    }
    if omega.domain_size() != group.order() {
        return Err(Error::DomainMismatch);
    }
    if g >= group.order() {
        return Err(Error::ElementOutOfRange { element: g, order: group.order() });
    }
    let m = omega.modulus();
    let s = sub.len();
    let mut values = vec![0u64; s * s];
    for (i, &h) in sub.elements().iter().enumerate() {
        let hg = group.conjugate(g, h);
        for (j, &l) in sub.elements().iter().enumerate() {
            let lg = group.conjugate(g, l);
            let term1 = omega.get(&[g, h, l])?;
            let term2 = omega.get(&[hg, lg, g])?;
            let term3 = omega.get(&[hg, g, l])?;
            values[i * s + j] = (term1 + term2 + (m - term3)) % m;
        }
    }
    let out = Cochain { degree: 2, modulus: m, domain: sub.elements().to_vec(), values };
    debug_assert!(out.validate(group).is_ok());
    Ok(out)
}

fn check_degree_modulus(degree: usize, modulus: u64) -> Result<()> {
    if !(1..=4).contains(&degree) {
        return Err(Error::BadDegree { expected: "1..=4", found: degree });
    }
    if modulus == 0 {
        return Err(Error::ModulusNotDivisible { n: 1, modulus });
    }
    Ok(())
}

#[inline]
fn decode_tuple(mut flat: usize, size: usize, tuple: &mut [usize]) {
    for slot in tuple.iter_mut().rev() {
        *slot = flat % size;
        flat /= size;
    }
}

/// One value of the coboundary, computed from local indices:
/// `(dF)(t₀,…,t_k) = F(t₁,…,t_k) + Σᵢ (−1)^{i+1} F(…, tᵢ·tᵢ₊₁, …) + (−1)^{k+1} F(t₀,…,t_{k−1})`.
fn coboundary_at(c: &Cochain, local: &LocalTables, tuple: &[usize], m: u64) -> u64 {
    let k = c.degree;
    debug_assert_eq!(tuple.len(), k + 1);
    // Leading term: drop the first argument.
    let mut acc: u64 = c.get_local(&tuple[1..]) % m;
    // Inner terms: merge arguments i and i+1, alternating signs.
    let mut args = vec![0usize; k];
    for i in 0..k {
        args[..i].copy_from_slice(&tuple[..i]);
        args[i] = local.mul(tuple[i], tuple[i + 1]);
        args[i + 1..].copy_from_slice(&tuple[i + 2..]);
        let v = c.get_local(&args);
        if (i + 1) % 2 == 1 {
            acc += m - v;
        } else {
            acc += v;
        }
        acc %= m;
    }
    // Trailing term: drop the last argument, sign (−1)^{k+1}.
    let v = c.get_local(&tuple[..k]);
    if (k + 1) % 2 == 1 {
        acc += m - v;
    } else {
        acc += v;
    }
    acc % m
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cyclic(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    #[test]
    fn coboundary_of_one_cochain() {
        // G = cyclic(2), M = 4, τ(1) = 1: (dτ)(1,1) = τ(1) − τ(0) + τ(1) = 2.
        let g = cyclic(2);
        let tau =
            Cochain::from_sparse(&g, &g.whole_subgroup(), 1, 4, &[(vec![1], 1)]).unwrap();
        let d = tau.coboundary(&g).unwrap();
        assert_eq!(d.get(&[1, 1]).unwrap(), 2);
        assert_eq!(d.get(&[0, 1]).unwrap(), 0);
    }

    #[test]
    fn coboundary_of_zero_is_zero() {
        let g = cyclic(3);
        let z = Cochain::zero_on_group(&g, 2, 6).unwrap();
        assert!(z.coboundary(&g).unwrap().is_zero());
    }

    #[test]
    fn top_degree_rejected() {
        let g = cyclic(2);
        let c3 = Cochain::zero_on_group(&g, 3, 2).unwrap();
        let c4 = c3.coboundary(&g).unwrap();
        assert_eq!(c4.degree(), 4);
        assert_eq!(c4.coboundary(&g).unwrap_err(), Error::TopDegree);
    }

    #[test]
    fn d_after_d_vanishes() {
        // Small deterministic sweep; the bulk randomized sweep lives in the
        // property tests.
        let g = FiniteGroup::symmetric(3).unwrap();
        let sub = g.whole_subgroup();
        let mut state = 0x9e37u64;
        for _ in 0..20 {
            for degree in 1..=2usize {
                let s = sub.len();
                let mut values = vec![0u64; s.pow(degree as u32)];
                for v in values.iter_mut() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    *v = (state >> 33) % 12;
                }
                // Zero out identity-containing tuples.
                let c = {
                    let mut c =
                        Cochain::from_dense_unchecked(&sub, degree, 12, values).unwrap();
                    for flat in 0..c.values.len() {
                        if c.tuple_of_flat(flat).contains(&0) {
                            c.values[flat] = 0;
                        }
                    }
                    c
                };
                assert!(c.coboundary(&g).unwrap().coboundary(&g).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn cyclic_generator_values() {
        // n=2, q=1, M=2: ω(1,1,1) = 1, zero elsewhere.
        let w = Cochain::cyclic_three_cocycle(2, 1, 2).unwrap();
        assert_eq!(w.get(&[1, 1, 1]).unwrap(), 1);
        assert_eq!(w.values().iter().filter(|&&v| v != 0).count(), 1);
        // q = 0 is the zero cochain.
        assert!(Cochain::cyclic_three_cocycle(3, 0, 6).unwrap().is_zero());
        // n=3, q=1, M=3: ω(1,2,2) = 1·1·⌊4/3⌋·1 = 1.
        let w = Cochain::cyclic_three_cocycle(3, 1, 3).unwrap();
        assert_eq!(w.get(&[1, 2, 2]).unwrap(), 1);
        // n must divide M.
        assert!(Cochain::cyclic_three_cocycle(2, 1, 3).is_err());
    }

    #[test]
    fn cyclic_generators_are_cocycles() {
        for n in 1..=12usize {
            let g = cyclic(n);
            for q in 0..n as u64 {
                for k in 1..=4u64 {
                    let w = Cochain::cyclic_three_cocycle(n, q, n as u64 * k).unwrap();
                    assert!(w.is_cocycle(&g), "n={n} q={q} k={k}");
                }
            }
        }
    }

    #[test]
    fn cocycle_detection() {
        let g = cyclic(2);
        // Zero cochain of any degree is a cocycle.
        for degree in 1..=3 {
            assert!(Cochain::zero_on_group(&g, degree, 4).unwrap().is_cocycle(&g));
        }
        // β(1,1) = 1 on cyclic(2) at M=4 is a cocycle in degree 2 (d is zero
        // there), but τ(1)=1 in degree 1 is not.
        let beta =
            Cochain::from_sparse(&g, &g.whole_subgroup(), 2, 4, &[(vec![1, 1], 1)]).unwrap();
        assert!(beta.is_cocycle(&g));
        let tau =
            Cochain::from_sparse(&g, &g.whole_subgroup(), 1, 4, &[(vec![1], 1)]).unwrap();
        assert!(!tau.is_cocycle(&g));
    }

    #[test]
    fn restriction_examples() {
        // Restrict to the trivial subgroup: zero cochain.
        let g = cyclic(4);
        let w = Cochain::cyclic_three_cocycle(4, 1, 4).unwrap();
        let triv = g.trivial_subgroup();
        assert!(w.restrict(&g, &triv).unwrap().is_zero());
        // Restrict to {0,2}: value at (2,2,2) is 1·2·⌊4/4⌋·1 = 2.
        let sub = g.subgroup(&[0, 2]).unwrap();
        let r = w.restrict(&g, &sub).unwrap();
        assert_eq!(r.get(&[2, 2, 2]).unwrap(), 2);
        assert!(r.is_normalized(&g));
        // Restricting a cochain on {0,2} back up to a set outside its domain errors.
        assert_eq!(r.restrict(&g, &g.whole_subgroup()).unwrap_err(), Error::NotSubgroup);
    }

    #[test]
    fn conjugation_examples() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        // g = identity leaves everything fixed.
        let sub = all_order_two(&s3)[0].clone();
        let c = Cochain::from_sparse(
            &s3,
            &sub,
            2,
            4,
            &[(vec![sub.elements()[1], sub.elements()[1]], 3)],
        )
        .unwrap();
        let same = c.conjugate_by(&s3, s3.identity()).unwrap();
        assert_eq!(c, same);
        // Conjugating by a 3-cycle moves the cochain to a different order-2
        // subgroup and carries the single nonzero value along.
        let three_cycle = (0..6).find(|&x| s3.element_order(x) == 3).unwrap();
        let moved = c.conjugate_by(&s3, three_cycle).unwrap();
        assert_ne!(moved.domain(), c.domain());
        assert_eq!(moved.values().iter().filter(|&&v| v != 0).count(), 1);
        assert_eq!(moved.values().iter().max(), Some(&3));
        // Abelian parent: conjugation is the identity for any g.
        let c4 = cyclic(4);
        let w = Cochain::cyclic_three_cocycle(4, 1, 4).unwrap();
        for g in 0..4 {
            assert_eq!(w.conjugate_by(&c4, g).unwrap(), w);
        }
    }

    #[test]
    fn inflation_examples() {
        let c4 = cyclic(4);
        let c2 = cyclic(2);
        let w = Cochain::cyclic_three_cocycle(2, 1, 2).unwrap();
        // a mod 2 is a surjective homomorphism cyclic(4) → cyclic(2).
        let proj = vec![0, 1, 0, 1];
        let inflated = w.inflate_along(&c4, &c2, &proj).unwrap();
        assert_eq!(inflated.get(&[1, 1, 1]).unwrap(), 1);
        assert!(inflated.is_cocycle(&c4));
        // Identity projection is the identity operation.
        let same = w.inflate_along(&c2, &c2, &[0, 1]).unwrap();
        assert_eq!(same, w);
        // Zero inflates to zero.
        let z = Cochain::zero_on_group(&c2, 3, 2).unwrap();
        assert!(z.inflate_along(&c4, &c2, &proj).unwrap().is_zero());
        // Non-homomorphisms are named.
        let bad = vec![0, 1, 1, 1];
        assert!(matches!(
            w.inflate_along(&c4, &c2, &bad),
            Err(Error::NotHomomorphism(..))
        ));
    }

    #[test]
    fn conjugation_twist_examples() {
        let c4 = cyclic(4);
        let w = Cochain::cyclic_three_cocycle(4, 1, 4).unwrap();
        let whole = c4.whole_subgroup();
        // Ω_e = 0 for normalized ω.
        assert!(conjugation_twist(&w, &c4, 0, &whole).unwrap().is_zero());
        // ω = 0 gives Ω_g = 0 for every g.
        let z = Cochain::zero_on_group(&c4, 3, 4).unwrap();
        for g in 0..4 {
            assert!(conjugation_twist(&z, &c4, g, &whole).unwrap().is_zero());
        }
        // Ω₁(2,3) = ω(1,2,3) + ω(2,3,1) − ω(2,1,3) = 1 + 2 − 2 = 1.
        let omega_1 = conjugation_twist(&w, &c4, 1, &whole).unwrap();
        assert_eq!(omega_1.get(&[2, 3]).unwrap(), 1);
    }

    #[test]
    fn embedding_and_canonical_modulus() {
        let w = Cochain::cyclic_three_cocycle(2, 1, 2).unwrap();
        let e = w.embed(4).unwrap();
        assert_eq!(e.get(&[1, 1, 1]).unwrap(), 2);
        assert!(e.same_phase(&w));
        assert_eq!(e.value_order(), 2);
        assert_eq!(e.canonicalized(), w);
        assert!(w.embed(3).is_err());
    }

    #[test]
    fn normalization_enforced() {
        let g = cyclic(2);
        let res = Cochain::from_sparse(&g, &g.whole_subgroup(), 2, 4, &[(vec![0, 1], 1)]);
        assert!(matches!(res, Err(Error::NotNormalized(_))));
    }

    fn all_order_two(g: &FiniteGroup) -> Vec<Subgroup> {
        crate::group::all_subgroups(g).into_iter().filter(|s| s.len() == 2).collect()
    }
}
