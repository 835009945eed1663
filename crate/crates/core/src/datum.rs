//! Skeletal verification of the classifying data and the twisted group
//! algebra it presents.
//!
//! A datum is a subgroup `H` together with a normalized 2-cochain `β` on it;
//! it is valid for the ambient 3-cocycle `ω` exactly when `dβ = ω|_H`
//! (multiplicatively: the coboundary of `β` cancels the associator). The
//! same condition is equivalently the associativity of the twisted group
//! algebra with basis `{e_h}` and product `e_h·e_f = β(h,f)⁻¹ e_{hf}` inside
//! the ω-twisted category, and both checks are implemented so that either
//! can guard the other.

use alloc::vec;
use alloc::vec::Vec;

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// A subgroup plus a 2-cochain on it: the data presenting one indecomposable
/// exact module category (and one twisted group algebra).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDatum {
    pub subgroup: Subgroup,
    pub beta: Cochain,
}

impl AlgebraDatum {
    pub fn new(subgroup: Subgroup, beta: Cochain) -> Result<Self> {
        if beta.degree() != 2 {
            return Err(Error::BadDegree { expected: "2", found: beta.degree() });
        }
        if beta.domain() != subgroup.elements() {
            return Err(Error::DomainMismatch);
        }
        Ok(AlgebraDatum { subgroup, beta })
    }
}

/// Result of checking a datum against ω.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DatumCheck {
    Pass,
    /// β fails the unit axiom: nonzero at a tuple containing the identity.
    UnitFailure { tuple: Vec<usize> },
    /// `dβ ≠ ω|_H`; holds the lexicographically first violating triple of
    /// parent elements with both sides' values.
    AssociativityFailure { triple: [usize; 3], d_beta: u64, omega: u64 },
}

impl DatumCheck {
    pub fn passed(&self) -> bool {
        matches!(self, DatumCheck::Pass)
    }
}

/// Checks the unit axiom (β normalized) and `dβ = ω|_H` pointwise, reporting
/// the lexicographically first violation.
///
/// `omega` must be a normalized 3-cocycle on the whole group at the same
/// modulus as β.
pub fn verify_datum(
    group: &FiniteGroup,
    datum: &AlgebraDatum,
    omega: &Cochain,
) -> Result<DatumCheck> {
    if omega.degree() != 3 {
        return Err(Error::BadDegree { expected: "3", found: omega.degree() });
    }
    if omega.modulus() != datum.beta.modulus() {
        return Err(Error::ModulusMismatch {
            left: omega.modulus(),
            right: datum.beta.modulus(),
        });
    }
    let elements = datum.subgroup.elements();
    let identity = group.identity();
    // Unit axiom: β(1,h) = β(h,1) = 0, scanned in lexicographic order.
    for &a in elements {
        for &b in elements {
            if (a == identity || b == identity) && datum.beta.get(&[a, b])? != 0 {
                return Ok(DatumCheck::UnitFailure { tuple: vec![a, b] });
            }
        }
    }
    // dβ = ω|_H, lexicographic scan of all triples.
    for &a in elements {
        for &b in elements {
            for &c in elements {
                let d_beta = d_beta_at(group, &datum.beta, a, b, c)?;
                let w = omega.get(&[a, b, c])?;
                if d_beta != w {
                    return Ok(DatumCheck::AssociativityFailure {
                        triple: [a, b, c],
                        d_beta,
                        omega: w,
                    });
                }
            }
        }
    }
    Ok(DatumCheck::Pass)
}

fn d_beta_at(
    group: &FiniteGroup,
    beta: &Cochain,
    a: usize,
    b: usize,
    c: usize,
) -> Result<u64> {
    let m = beta.modulus();
    let t1 = beta.get(&[b, c])?;
    let t2 = beta.get(&[group.mul(a, b), c])?;
    let t3 = beta.get(&[a, group.mul(b, c)])?;
    let t4 = beta.get(&[a, b])?;
    Ok((t1 + (m - t2) + t3 + (m - t4)) % m)
}

/// The twisted group algebra of a datum: one basis line per `h ∈ H`, with
/// `e_h · e_f = scalar(h,f) · e_{hf}` where the scalar is stored as its
/// exponent in `Z/M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedGroupAlgebra {
    subgroup: Subgroup,
    modulus: u64,
    /// Row-major `|H| × |H|` exponent table, indexed by subgroup positions.
    mult_scalar: Vec<u64>,
}

impl TwistedGroupAlgebra {
    /// Builds the algebra of a datum: `scalar(h,f) = −β(h,f) mod M`, the
    /// exponent form of multiplying through `β⁻¹`.
    ///
    /// Requires the unit axiom (β normalized at identity tuples); the
    /// associativity axiom is deliberately not required, so that both valid
    /// and invalid data can be compared against the associativity check.
    pub fn from_datum(group: &FiniteGroup, datum: &AlgebraDatum) -> Result<Self> {
        let elements = datum.subgroup.elements();
        let identity = group.identity();
        let m = datum.beta.modulus();
        let s = elements.len();
        let mut mult_scalar = vec![0u64; s * s];
        for (i, &h) in elements.iter().enumerate() {
            for (j, &f) in elements.iter().enumerate() {
                let b = datum.beta.get(&[h, f])?;
                if (h == identity || f == identity) && b != 0 {
                    return Err(Error::NotNormalized(i * s + j));
                }
                mult_scalar[i * s + j] = (m - b) % m;
            }
        }
        Ok(TwistedGroupAlgebra { subgroup: datum.subgroup.clone(), modulus: m, mult_scalar })
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of basis lines, one per element of `H`.
    pub fn dimension(&self) -> usize {
        self.subgroup.len()
    }

    /// Exponent of the scalar in `e_h · e_f = scalar · e_{hf}`, by parent
    /// elements.
    pub fn mult_scalar(&self, h: usize, f: usize) -> Result<u64> {
        let i = self.subgroup.index_of(h).ok_or(Error::DomainMismatch)?;
        let j = self.subgroup.index_of(f).ok_or(Error::DomainMismatch)?;
        Ok(self.mult_scalar[i * self.subgroup.len() + j])
    }

    /// Associativity of the algebra inside the ω-twisted category: for all
    /// `h,f,l ∈ H`,
    /// `scalar(h,f) + scalar(hf,l) = ω(h,f,l) + scalar(f,l) + scalar(h,fl)`.
    pub fn is_associative_in(&self, group: &FiniteGroup, omega: &Cochain) -> Result<bool> {
        if omega.degree() != 3 {
            return Err(Error::BadDegree { expected: "3", found: omega.degree() });
        }
        if omega.modulus() != self.modulus {
            return Err(Error::ModulusMismatch { left: omega.modulus(), right: self.modulus });
        }
        let m = self.modulus;
        let elements = self.subgroup.elements();
        for &h in elements {
            for &f in elements {
                let hf = group.mul(h, f);
                for &l in elements {
                    let lhs =
                        (self.mult_scalar(h, f)? + self.mult_scalar(hf, l)?) % m;
                    let rhs = (omega.get(&[h, f, l])?
                        + self.mult_scalar(f, l)?
                        + self.mult_scalar(h, group.mul(f, l))?)
                        % m;
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// A claimed equivalence between two data: the conjugator `g` and the scalar
/// system τ on the first datum's subgroup. τ may live at a finer modulus
/// than the data (it is a `k^×` witness).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub g: usize,
    pub tau: Cochain,
}

/// Verifies a witness against the defining scalar relation, pointwise and
/// exactly.
///
/// For `a = (H, β)` and `b = (L, ξ)` the witness `(g, τ)` must satisfy
/// `L = g·H·g⁻¹`, `τ(1) = 0`, and for all `h, l ∈ H`
///
/// ```text
/// β(h,l) + τ(hl) = ω(g,h,l) + τ(h) − ω(ghg⁻¹, g, l) + τ(l)
///                + ω(ghg⁻¹, glg⁻¹, g) + ξ(ghg⁻¹, glg⁻¹)
/// ```
///
/// with every term embedded into the least common modulus.
pub fn verify_equivalence_witness(
    group: &FiniteGroup,
    witness: &EquivalenceWitness,
    a: &AlgebraDatum,
    b: &AlgebraDatum,
    omega: &Cochain,
) -> Result<bool> {
    if a.beta.modulus() != b.beta.modulus() || a.beta.modulus() != omega.modulus() {
        return Err(Error::ModulusMismatch {
            left: a.beta.modulus(),
            right: b.beta.modulus().max(omega.modulus()),
        });
    }
    let g = witness.g;
    if g >= group.order() {
        return Err(Error::ElementOutOfRange { element: g, order: group.order() });
    }
    // Conjugation condition: b.H = g · a.H · g⁻¹.
    let conjugated = a.subgroup.conjugated(group, g);
    if conjugated.elements() != b.subgroup.elements() {
        return Ok(false);
    }
    if witness.tau.degree() != 1 || witness.tau.domain() != a.subgroup.elements() {
        return Ok(false);
    }
    // Common modulus for the mixed-level comparison.
    let m = a.beta.modulus();
    let mt = witness.tau.modulus();
    let l_mod = lcm(m, mt);
    let (km, kt) = (l_mod / m, l_mod / mt);
    // τ(1) = 0.
    if witness.tau.get(&[group.identity()])? != 0 {
        return Ok(false);
    }
    for &h in a.subgroup.elements() {
        let hg = group.conjugate(g, h);
        for &l in a.subgroup.elements() {
            let lg = group.conjugate(g, l);
            let hl = group.mul(h, l);
            let lhs = (a.beta.get(&[h, l])? * km + witness.tau.get(&[hl])? * kt) % l_mod;
            let rhs = (omega.get(&[g, h, l])? * km
                + witness.tau.get(&[h])? * kt
                + (l_mod - omega.get(&[hg, g, l])? * km % l_mod)
                + witness.tau.get(&[l])? * kt
                + omega.get(&[hg, lg, g])? * km
                + b.beta.get(&[hg, lg])? * km)
                % l_mod;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn lcm(a: u64, b: u64) -> u64 {
    a / crate::linalg::gcd(a, b) * b
}
