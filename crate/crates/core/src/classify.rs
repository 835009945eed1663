//! Classification of indecomposable exact module categories over the
//! ω-twisted category of a finite group.
//!
//! The pipeline per conjugacy class of subgroups `H ≤ G`:
//!
//! 1. solve `dβ = ω|_H` over `Z/M` — unsolvable means the stratum is
//!    obstructed at this modulus;
//! 2. when solvable, the solution classes form a torsor over `H²(H, Z/M)`,
//!    materialized as a base solution plus the cohomology class
//!    representatives;
//! 3. the normalizer `N_G(H)` acts on classes by
//!    `ξ ↦ ξ^g + Ω_g` (conjugation plus the associator correction); orbits
//!    of this action are the equivalence classes with first component `H`.
//!
//! The total over all strata counts the module categories; the `H = G`
//! stratum counts fiber functors. Everything is deterministic: conjugacy
//! representatives are canonical, orbit representatives are the
//! lexicographically least coordinate vectors.

use alloc::vec;
use alloc::vec::Vec;

use crate::cochain::{conjugation_twist, Cochain};
use crate::cohomology::{cochain_to_vec, coboundary_matrix, coboundary_witness, vec_to_cochain, CohomologyGroup};
use crate::datum::{verify_datum, verify_equivalence_witness, AlgebraDatum, EquivalenceWitness};
use crate::error::{Error, Result};
use crate::group::{normalizer, subgroup_conjugacy_classes, FiniteGroup, Subgroup};

/// Resource limits for dense tables and class enumeration.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    /// Maximum entries of any materialized coboundary matrix.
    pub matrix_cells: u64,
    /// Maximum number of solution classes enumerated per stratum.
    pub classes: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { matrix_cells: 1 << 26, classes: 1_000_000 }
    }
}

impl Caps {
    pub fn with_class_cap(classes: u64) -> Self {
        Caps { classes, ..Caps::default() }
    }
}

/// Default working modulus: `|G|` times the order of ω's value group, so
/// that every class of `H²(H, k^×)` for `H ≤ G` is visible.
pub fn default_modulus(group: &FiniteGroup, omega: &Cochain) -> u64 {
    group.order() as u64 * omega.value_order().max(1)
}

/// Validates ω (normalized 3-cocycle on the whole group) and re-encodes it
/// at the session modulus.
pub fn prepare_omega(
    group: &FiniteGroup,
    omega: &Cochain,
    modulus: Option<u64>,
) -> Result<Cochain> {
    if omega.degree() != 3 {
        return Err(Error::BadDegree { expected: "3", found: omega.degree() });
    }
    if omega.domain().len() != group.order() {
        return Err(Error::DomainMismatch);
    }
    if !omega.is_cocycle(group) {
        return Err(Error::Invariant("omega is not a 3-cocycle".into()));
    }
    let target = modulus.unwrap_or_else(|| default_modulus(group, omega));
    let canonical = omega.canonicalized();
    canonical.embed(target)
}

/// One solvable stratum: a base solution of `dβ = ω|_H` and the full,
/// duplicate-free list of solution classes (a torsor over `H²(H, Z/M)`).
#[derive(Debug)]
pub struct BetaTorsor {
    pub base: Cochain,
    pub h2: CohomologyGroup,
    pub classes: Vec<Cochain>,
}

/// Solves `dβ = ω|_H` over `Z/M` and materializes the solution classes.
///
/// Returns `None` when the system is unsolvable at this modulus (the
/// stratum is obstructed at modulus `M`). ω is expected at the session
/// modulus already.
pub fn solve_beta_torsor(
    group: &FiniteGroup,
    omega: &Cochain,
    sub: &Subgroup,
    caps: &Caps,
) -> Result<Option<BetaTorsor>> {
    let m = omega.modulus();
    let omega_h = omega.restrict(group, sub)?;
    let d2 = coboundary_matrix(group, sub, 2, m, caps.matrix_cells)?;
    let target = cochain_to_vec(group, &omega_h)?;
    let Some(solution) = d2.solve(&target)? else {
        return Ok(None);
    };
    let base = vec_to_cochain(group, sub, 2, m, &solution.particular)?;
    debug_assert!(base.coboundary(group)?.same_phase(&omega_h));
    let h2 = CohomologyGroup::compute(group, sub, 2, m, caps.matrix_cells)?;
    let reps = h2.enumerate_representatives(group, caps.classes)?;
    let mut classes = Vec::with_capacity(reps.len());
    for rep in reps {
        classes.push(base.add(&rep)?);
    }
    Ok(Some(BetaTorsor { base, h2, classes }))
}

/// The twisted conjugation action on 2-cochains: for ξ on `gHg⁻¹`,
/// `(g·ξ)(h,l) = ξ(ghg⁻¹, glg⁻¹) + Ω_g(h,l)` on `H`.
///
/// When the input satisfies `dξ = ω` on its domain, the output is checked
/// to satisfy `d(g·ξ) = ω` on `H`; this assertion is the standing guard
/// against sign-convention drift and is never compiled out.
pub fn twist_action(
    group: &FiniteGroup,
    g: usize,
    xi: &Cochain,
    omega: &Cochain,
) -> Result<Cochain> {
    if xi.degree() != 2 {
        return Err(Error::BadDegree { expected: "2", found: xi.degree() });
    }
    if omega.modulus() != xi.modulus() {
        return Err(Error::ModulusMismatch { left: omega.modulus(), right: xi.modulus() });
    }
    let conjugated = xi.conjugate_by(group, g)?;
    let target = group.subgroup(conjugated.domain())?;
    let correction = conjugation_twist(omega, group, g, &target)?;
    let out = conjugated.add(&correction)?;
    let source = group.subgroup(xi.domain())?;
    let omega_source = omega.restrict(group, &source)?;
    if xi.coboundary(group)? == omega_source {
        let omega_target = omega.restrict(group, &target)?;
        assert!(
            out.coboundary(group)? == omega_target,
            "twist action broke the coboundary condition"
        );
    }
    Ok(out)
}

/// Report for one conjugacy class of subgroups.
#[derive(Debug, Clone)]
pub struct StratumReport {
    /// Canonical representative of the conjugacy class.
    pub subgroup: Subgroup,
    /// Number of subgroups in the class.
    pub class_size: usize,
    /// True when `dβ = ω|_H` has no solution at the working modulus.
    pub obstructed: bool,
    /// Coordinates of `[ω|_H]` in `H³(H, Z/M)`; present when obstructed and
    /// the table fits the caps.
    pub h3_coordinates: Option<Vec<u64>>,
    /// Invariant factors of `H²(H, Z/M)` (empty when obstructed).
    pub h2_invariant_factors: Vec<u64>,
    /// Number of solution classes (the torsor size; 0 when obstructed).
    pub class_count: u64,
    /// Number of orbits under the twisted normalizer action.
    pub orbit_count: u64,
    /// One datum per orbit, lexicographically least coordinates first.
    pub representatives: Vec<AlgebraDatum>,
}

/// The full classification answer for `(G, ω)` at a working modulus.
#[derive(Debug)]
pub struct ClassificationReport {
    pub modulus: u64,
    pub strata: Vec<StratumReport>,
    /// Total count of indecomposable exact module categories.
    pub total: u64,
    /// Count for the `H = G` stratum.
    pub fiber_functors: u64,
    pub fiber_representatives: Vec<AlgebraDatum>,
}

fn stratum_report(
    group: &FiniteGroup,
    omega: &Cochain,
    rep: &Subgroup,
    class_size: usize,
    caps: &Caps,
) -> Result<StratumReport> {
    let m = omega.modulus();
    match solve_beta_torsor(group, omega, rep, caps)? {
        None => {
            // Obstructed at this modulus; H³ coordinates are diagnostics and
            // are skipped when they would blow the cap.
            let h3_coordinates =
                match CohomologyGroup::compute(group, rep, 3, m, caps.matrix_cells) {
                    Ok(h3) => Some(h3.project(group, &omega.restrict(group, rep)?)?),
                    Err(Error::ResourceCap { .. }) => None,
                    Err(e) => return Err(e),
                };
            Ok(StratumReport {
                subgroup: rep.clone(),
                class_size,
                obstructed: true,
                h3_coordinates,
                h2_invariant_factors: Vec::new(),
                class_count: 0,
                orbit_count: 0,
                representatives: Vec::new(),
            })
        }
        Some(torsor) => {
            let h2 = &torsor.h2;
            let factors = h2.invariant_factors().to_vec();
            let class_count = h2.order();
            let norm = normalizer(group, rep)?;
            // The normalizer acts affinely on H² coordinates: precompute, for
            // each g, the translation (the twist of the base relative to the
            // base) and the linear part (projections of conjugated
            // generators).
            let rank = factors.len();
            let mut actions: Vec<(Vec<u64>, Vec<Vec<u64>>)> =
                Vec::with_capacity(norm.len());
            for &g in norm.elements() {
                let twisted_base = twist_action(group, g, &torsor.base, omega)?;
                let translation = h2.project(group, &twisted_base.sub(&torsor.base)?)?;
                let mut columns = Vec::with_capacity(rank);
                for gen in h2.class_generators() {
                    columns.push(h2.project(group, &gen.conjugate_by(group, g)?)?);
                }
                actions.push((translation, columns));
            }
            // Orbit enumeration on mixed-radix coordinate vectors.
            let total = class_count as usize;
            let mut visited = vec![false; total];
            let mut orbit_coords: Vec<Vec<u64>> = Vec::new();
            let encode = |coords: &[u64]| -> usize {
                let mut idx = 0usize;
                for (c, &d) in coords.iter().zip(&factors) {
                    idx = idx * d as usize + *c as usize;
                }
                idx
            };
            let decode = |mut idx: usize| -> Vec<u64> {
                let mut coords = vec![0u64; rank];
                for (slot, &d) in coords.iter_mut().zip(&factors).rev() {
                    *slot = (idx % d as usize) as u64;
                    idx /= d as usize;
                }
                coords
            };
            for start in 0..total {
                if visited[start] {
                    continue;
                }
                visited[start] = true;
                orbit_coords.push(decode(start));
                let mut frontier = vec![start];
                while let Some(at) = frontier.pop() {
                    let coords = decode(at);
                    for (translation, columns) in &actions {
                        let mut next = translation.clone();
                        for (i, &c) in coords.iter().enumerate() {
                            for (slot, (&col, &d)) in
                                next.iter_mut().zip(columns[i].iter().zip(&factors))
                            {
                                *slot = (*slot + c * col) % d;
                            }
                        }
                        let idx = encode(&next);
                        if !visited[idx] {
                            visited[idx] = true;
                            frontier.push(idx);
                        }
                    }
                }
            }
            let mut representatives = Vec::with_capacity(orbit_coords.len());
            for coords in &orbit_coords {
                let beta = torsor.base.add(&h2.class_representative(group, coords)?)?;
                let datum = AlgebraDatum::new(rep.clone(), beta)?;
                if !verify_datum(group, &datum, omega)?.passed() {
                    return Err(Error::Invariant(
                        "orbit representative fails the datum check".into(),
                    ));
                }
                representatives.push(datum);
            }
            Ok(StratumReport {
                subgroup: rep.clone(),
                class_size,
                obstructed: false,
                h3_coordinates: None,
                h2_invariant_factors: factors,
                class_count,
                orbit_count: orbit_coords.len() as u64,
                representatives,
            })
        }
    }
}

/// Classifies the indecomposable exact module categories of `(G, ω)`.
///
/// `omega` may live at any modulus whose phases embed into the session
/// modulus (`modulus` override, or the default policy).
pub fn classify(
    group: &FiniteGroup,
    omega: &Cochain,
    modulus: Option<u64>,
    caps: &Caps,
) -> Result<ClassificationReport> {
    let omega = prepare_omega(group, omega, modulus)?;
    let classes = subgroup_conjugacy_classes(group);
    let mut strata = Vec::with_capacity(classes.len());
    for (rep, members) in &classes {
        strata.push(stratum_report(group, &omega, rep, members.len(), caps)?);
    }
    let total = strata.iter().map(|s| s.orbit_count).sum();
    let last = strata.last().expect("at least the whole group");
    assert!(last.subgroup.is_whole(), "classes are sorted by order");
    let fiber_functors = last.orbit_count;
    let fiber_representatives = last.representatives.clone();
    Ok(ClassificationReport {
        modulus: omega.modulus(),
        strata,
        total,
        fiber_functors,
        fiber_representatives,
    })
}

/// Counts equivalence classes of fiber functors: the `H = G` stratum only.
pub fn fiber_functors(
    group: &FiniteGroup,
    omega: &Cochain,
    modulus: Option<u64>,
    caps: &Caps,
) -> Result<(u64, Vec<AlgebraDatum>)> {
    let omega = prepare_omega(group, omega, modulus)?;
    let whole = group.whole_subgroup();
    let report = stratum_report(group, &omega, &whole, 1, caps)?;
    Ok((report.orbit_count, report.representatives))
}

/// Decides equivalence of two data, returning an explicit witness on
/// success.
///
/// Searches all `g ∈ G` with `g·(a.H)·g⁻¹ = b.H`; for each, the data are
/// equivalent through `g` iff `a.β − (g·b.β)` is a coboundary, and the
/// witness τ is exactly the coboundary witness. Every returned witness is
/// re-verified against the defining scalar relation before being emitted.
pub fn are_equivalent(
    group: &FiniteGroup,
    a: &AlgebraDatum,
    b: &AlgebraDatum,
    omega: &Cochain,
) -> Result<Option<EquivalenceWitness>> {
    if a.beta.modulus() != b.beta.modulus() {
        return Err(Error::ModulusMismatch {
            left: a.beta.modulus(),
            right: b.beta.modulus(),
        });
    }
    if omega.modulus() != a.beta.modulus() {
        return Err(Error::ModulusMismatch { left: omega.modulus(), right: a.beta.modulus() });
    }
    for g in 0..group.order() {
        if a.subgroup.conjugated(group, g).elements() != b.subgroup.elements() {
            continue;
        }
        let twisted = twist_action(group, g, &b.beta, omega)?;
        debug_assert_eq!(twisted.domain(), a.subgroup.elements());
        let delta = a.beta.sub(&twisted)?;
        if let Some(tau) = coboundary_witness(group, &delta)? {
            let witness = EquivalenceWitness { g, tau };
            // Immunity to residual convention slips: the witness must satisfy
            // the scalar relation verbatim.
            assert!(
                verify_equivalence_witness(group, &witness, a, b, omega)?,
                "equivalence witness failed pointwise re-verification"
            );
            return Ok(Some(witness));
        }
    }
    Ok(None)
}
