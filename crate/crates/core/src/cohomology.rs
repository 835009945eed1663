//! Cohomology of finite groups with root-of-unity coefficients, computed at
//! a working modulus `M`.
//!
//! `Z/M` stands for the subgroup `μ_M ⊂ k^×`, which changes what "coboundary"
//! means: a witness may live at a finer level than the cochain it bounds.
//! For a degree-2 cochain `c` at modulus `M` on a group of order `s`, any
//! `k^×` witness τ automatically has `ord(h)·τ(h) = Σᵢ c(h, hⁱ)`, so its
//! values lie at level `M·s`; testing coboundary-ness therefore solves
//! `dτ = s·c` over `Z/(M·s)`, which is both sound and complete. The same
//! lifted level is used in degree 3.
//!
//! [`CohomologyGroup`] packages `ker d / im d` under this convention as an
//! explicit finite abelian group: invariant factors, generator cocycles, and
//! a projection onto coordinates.

use alloc::vec;
use alloc::vec::Vec;

use crate::cochain::{Cochain, LocalTables};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::linalg::{smith_form, ModularMatrix, PreparedSolver};

/// Basis bookkeeping for normalized cochains on a fixed domain: the free
/// coordinates are tuples of non-identity elements, in lexicographic order.
pub(crate) struct TupleBasis {
    /// Local indices of the non-identity elements, ascending.
    free: Vec<usize>,
    /// Inverse of `free`: rank by local index, `usize::MAX` at the identity.
    rank: Vec<usize>,
    degree: usize,
}

impl TupleBasis {
    pub(crate) fn new(size: usize, identity: usize, degree: usize) -> Self {
        let free: Vec<usize> = (0..size).filter(|&i| i != identity).collect();
        let mut rank = vec![usize::MAX; size];
        for (r, &i) in free.iter().enumerate() {
            rank[i] = r;
        }
        TupleBasis { free, rank, degree }
    }

    pub(crate) fn len(&self) -> usize {
        self.free.len().pow(self.degree as u32)
    }

    /// Flat coordinate of a tuple of local indices, `None` if any argument is
    /// the identity.
    pub(crate) fn coord_of(&self, tuple: &[usize]) -> Option<usize> {
        let f = self.free.len();
        let mut acc = 0;
        for &t in tuple {
            let r = self.rank[t];
            if r == usize::MAX {
                return None;
            }
            acc = acc * f + r;
        }
        Some(acc)
    }

    /// Tuple of local indices at a flat coordinate.
    pub(crate) fn tuple_at(&self, mut coord: usize) -> Vec<usize> {
        let f = self.free.len();
        let mut tuple = vec![0usize; self.degree];
        for slot in tuple.iter_mut().rev() {
            *slot = self.free[coord % f];
            coord /= f;
        }
        tuple
    }
}

/// Flattens a normalized cochain onto its free coordinates.
pub fn cochain_to_vec(group: &FiniteGroup, c: &Cochain) -> Result<Vec<u64>> {
    let local = LocalTables::new(group, c.domain())?;
    let basis = TupleBasis::new(local.size, local.identity, c.degree());
    let mut out = vec![0u64; basis.len()];
    for (coord, slot) in out.iter_mut().enumerate() {
        let tuple = basis.tuple_at(coord);
        let parent: Vec<usize> = tuple.iter().map(|&t| c.domain()[t]).collect();
        *slot = c.get(&parent)?;
    }
    Ok(out)
}

/// Inverse of [`cochain_to_vec`].
pub fn vec_to_cochain(
    group: &FiniteGroup,
    sub: &Subgroup,
    degree: usize,
    modulus: u64,
    vec: &[u64],
) -> Result<Cochain> {
    let local = LocalTables::new(group, sub.elements())?;
    let basis = TupleBasis::new(local.size, local.identity, degree);
    if vec.len() != basis.len() {
        return Err(Error::DimensionMismatch);
    }
    let s = sub.len();
    let mut dense = vec![0u64; s.pow(degree as u32)];
    for (coord, &v) in vec.iter().enumerate() {
        let tuple = basis.tuple_at(coord);
        let mut flat = 0;
        for &t in &tuple {
            flat = flat * s + t;
        }
        dense[flat] = v % modulus;
    }
    Cochain::from_dense(group, sub, degree, modulus, dense)
}

/// The matrix of the coboundary `d: C^k → C^{k+1}` on free coordinates.
pub fn coboundary_matrix(
    group: &FiniteGroup,
    sub: &Subgroup,
    degree: usize,
    modulus: u64,
    cell_cap: u64,
) -> Result<ModularMatrix> {
    if !(1..=3).contains(&degree) {
        return Err(Error::BadDegree { expected: "1..=3", found: degree });
    }
    let local = LocalTables::new(group, sub.elements())?;
    let src = TupleBasis::new(local.size, local.identity, degree);
    let dst = TupleBasis::new(local.size, local.identity, degree + 1);
    let cells = dst.len() as u64 * src.len().max(1) as u64;
    if cells > cell_cap {
        return Err(Error::ResourceCap { required: cells, cap: cell_cap });
    }
    let m = modulus;
    let mut matrix = ModularMatrix::zeros(dst.len(), src.len(), m);
    let mut args = vec![0usize; degree];
    for row in 0..dst.len() {
        let tuple = dst.tuple_at(row);
        let add_term = |matrix: &mut ModularMatrix, args: &[usize], negative: bool| {
            if let Some(col) = src.coord_of(args) {
                let delta = if negative { m - 1 } else { 1 };
                let v = (matrix.get(row, col) + delta) % m;
                matrix.set(row, col, v);
            }
        };
        // Drop the first argument.
        add_term(&mut matrix, &tuple[1..], false);
        // Merge arguments i and i+1, alternating signs.
        for i in 0..degree {
            args[..i].copy_from_slice(&tuple[..i]);
            args[i] = local.mul(tuple[i], tuple[i + 1]);
            args[i + 1..].copy_from_slice(&tuple[i + 2..]);
            add_term(&mut matrix, &args, (i + 1) % 2 == 1);
        }
        // Drop the last argument.
        add_term(&mut matrix, &tuple[..degree], (degree + 1) % 2 == 1);
    }
    Ok(matrix)
}

/// Searches a normalized 1-cochain τ with `dτ = c` in the root-of-unity
/// sense: the witness may live at modulus `M·|H|`, where the search is
/// complete. Returns the witness at its minimal modulus.
pub fn coboundary_witness(group: &FiniteGroup, c: &Cochain) -> Result<Option<Cochain>> {
    if c.degree() != 2 {
        return Err(Error::BadDegree { expected: "2", found: c.degree() });
    }
    let sub = group.subgroup(c.domain())?;
    let s = sub.len() as u64;
    let lifted = c.modulus() * s;
    let d1 = coboundary_matrix(group, &sub, 1, lifted, u64::MAX)?;
    let target: Vec<u64> = cochain_to_vec(group, c)?.iter().map(|&v| v * s).collect();
    match d1.solve(&target)? {
        None => Ok(None),
        Some(sol) => {
            let tau = vec_to_cochain(group, &sub, 1, lifted, &sol.particular)?;
            let tau = tau.canonicalized();
            debug_assert!(tau
                .coboundary(group)
                .map(|d| d.same_phase(&c.embed(lifted).unwrap().canonicalized()))
                .unwrap_or(false));
            Ok(Some(tau))
        }
    }
}

/// `H^n(H, k^×)` as seen at working modulus `M`: cocycles at level `M`
/// modulo coboundaries with witnesses at level `M·|H|`.
#[derive(Debug)]
pub struct CohomologyGroup {
    degree: usize,
    modulus: u64,
    domain: Vec<usize>,
    invariant_factors: Vec<u64>,
    class_generators: Vec<Cochain>,
    /// Columns are the scaled cocycle generators `aᵢ` over `Z/(M·s)`.
    expression: PreparedSolver,
    gen_count: usize,
    /// Column transform of the Smith form of the relation lattice.
    v: Vec<Vec<i128>>,
    kept: Vec<usize>,
    diag: Vec<i128>,
}

impl CohomologyGroup {
    /// Computes `H^degree(sub, Z/modulus)` for `degree ∈ {1,2,3}`.
    ///
    /// Dense coboundary tables of size `(s−1)^{degree+1} × (s−1)^degree` are
    /// materialized; `cell_cap` bounds them and the error reports the
    /// required size.
    pub fn compute(
        group: &FiniteGroup,
        sub: &Subgroup,
        degree: usize,
        modulus: u64,
        cell_cap: u64,
    ) -> Result<Self> {
        if !(1..=3).contains(&degree) {
            return Err(Error::BadDegree { expected: "1..=3", found: degree });
        }
        let s = sub.len() as u64;
        let lifted = modulus * s;
        // Generators of the cocycles at level M, scaled into level M·s.
        let d_top = coboundary_matrix(group, sub, degree, modulus, cell_cap)?;
        let cocycle_gens = d_top.kernel();
        let dim = d_top.cols();
        let gens: Vec<Vec<u64>> = cocycle_gens
            .iter()
            .map(|k| k.iter().map(|&v| v * s).collect())
            .collect();
        let p = gens.len();
        // Coboundary generators at level M·s that land in the scaled lattice:
        // images of lifted mod-s kernel elements of the lower d, plus s times
        // the plain images.
        let mut boundary_gens: Vec<Vec<u64>> = Vec::new();
        if degree >= 2 {
            let d_low_lifted = coboundary_matrix(group, sub, degree - 1, lifted, cell_cap)?;
            let d_low_mod_s = coboundary_matrix(group, sub, degree - 1, s.max(1), cell_cap)?;
            for kappa in d_low_mod_s.kernel() {
                boundary_gens.push(d_low_lifted.apply(&kappa)?);
            }
            let low_dim = d_low_lifted.cols();
            for t in 0..low_dim {
                let mut e = vec![0u64; low_dim];
                e[t] = s % lifted;
                boundary_gens.push(d_low_lifted.apply(&e)?);
            }
        }
        // Expression matrix: columns are the gens, over Z/(M·s).
        let mut expr = ModularMatrix::zeros(dim, p, lifted);
        for (i, g) in gens.iter().enumerate() {
            for (r, &v) in g.iter().enumerate() {
                expr.set(r, i, v);
            }
        }
        let expression = expr.prepare_solver();
        // Relations: syzygies among the gens, expressions of the boundary
        // gens, and the modulus relations L·eᵢ.
        let mut relations: Vec<Vec<i128>> = Vec::new();
        for syz in expression.kernel() {
            relations.push(syz.iter().map(|&v| v as i128).collect());
        }
        for b in &boundary_gens {
            let c = expression
                .solve(b)?
                .ok_or_else(|| Error::Invariant("boundary outside cocycle span".into()))?;
            relations.push(c.iter().map(|&v| v as i128).collect());
        }
        for i in 0..p {
            let mut row = vec![0i128; p];
            row[i] = lifted as i128;
            relations.push(row);
        }
        let snf = smith_form(&relations, p);
        let kept: Vec<usize> = (0..p).filter(|&j| snf.diag[j] > 1).collect();
        let invariant_factors: Vec<u64> = kept.iter().map(|&j| snf.diag[j] as u64).collect();
        // Generators: h_j = Σ_i V⁻¹[j][i] · a_i, scaled back down to level M.
        let mut class_generators = Vec::with_capacity(kept.len());
        for &j in &kept {
            let mut acc = vec![0u64; dim];
            for (i, g) in gens.iter().enumerate() {
                let coeff = modfit_i128(snf.col_inverse[j][i], lifted);
                for (slot, &v) in acc.iter_mut().zip(g) {
                    *slot = ((*slot as u128 + coeff as u128 * v as u128) % lifted as u128) as u64;
                }
            }
            let scaled_down: Vec<u64> = acc
                .iter()
                .map(|&v| {
                    debug_assert_eq!(v % s, 0, "generator must lie in the scaled lattice");
                    v / s
                })
                .collect();
            let gen = vec_to_cochain(group, sub, degree, modulus, &scaled_down)?;
            debug_assert!(degree > 3 || gen.is_cocycle(group));
            class_generators.push(gen);
        }
        Ok(CohomologyGroup {
            degree,
            modulus,
            domain: sub.elements().to_vec(),
            invariant_factors,
            class_generators,
            expression,
            gen_count: p,
            v: snf.col_transform,
            kept,
            diag: snf.diag,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    /// Invariant factors `d₁ | d₂ | …`, each > 1; empty for the trivial group.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    /// One cocycle per invariant factor; `project` maps generator `i` to the
    /// `i`-th unit vector.
    pub fn class_generators(&self) -> &[Cochain] {
        &self.class_generators
    }

    /// Number of classes.
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    /// Coordinates of a cocycle's class: `(c₁ mod d₁, …, c_r mod d_r)`.
    pub fn project(&self, group: &FiniteGroup, z: &Cochain) -> Result<Vec<u64>> {
        if z.degree() != self.degree {
            return Err(Error::BadDegree { expected: "matching", found: z.degree() });
        }
        if z.modulus() != self.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: z.modulus() });
        }
        if z.domain() != self.domain {
            return Err(Error::DomainMismatch);
        }
        let s = self.domain.len() as u64;
        let vec: Vec<u64> = cochain_to_vec(group, z)?.iter().map(|&v| v * s).collect();
        let coeffs = self
            .expression
            .solve(&vec)?
            .ok_or_else(|| Error::Invariant("not a cocycle at this modulus".into()))?;
        let mut coords = Vec::with_capacity(self.kept.len());
        for &j in &self.kept {
            let mut acc: i128 = 0;
            for i in 0..self.gen_count {
                acc += self.v[i][j] * coeffs[i] as i128;
            }
            let d = self.diag[j];
            coords.push((((acc % d) + d) % d) as u64);
        }
        Ok(coords)
    }

    /// The cocycle `Σ coords_j · generator_j` at the working modulus.
    pub fn class_representative(
        &self,
        group: &FiniteGroup,
        coords: &[u64],
    ) -> Result<Cochain> {
        if coords.len() != self.invariant_factors.len() {
            return Err(Error::DimensionMismatch);
        }
        let sub = group.subgroup(&self.domain)?;
        let mut acc = Cochain::zero(&sub, self.degree, self.modulus)?;
        for ((&c, gen), &d) in
            coords.iter().zip(&self.class_generators).zip(&self.invariant_factors)
        {
            acc = acc.add(&gen.scaled(c % d))?;
        }
        Ok(acc)
    }

    /// Every class representative, coordinates in lexicographic order.
    pub fn enumerate_representatives(
        &self,
        group: &FiniteGroup,
        class_cap: u64,
    ) -> Result<Vec<Cochain>> {
        let total = self.order();
        if total > class_cap {
            return Err(Error::ClassCapExceeded { required: total, cap: class_cap });
        }
        let r = self.invariant_factors.len();
        let mut coords = vec![0u64; r];
        let mut out = Vec::with_capacity(total as usize);
        loop {
            out.push(self.class_representative(group, &coords)?);
            // Odometer over mixed radix, most significant first.
            let mut i = r;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                coords[i] += 1;
                if coords[i] < self.invariant_factors[i] {
                    break;
                }
                coords[i] = 0;
            }
        }
    }
}

fn modfit_i128(x: i128, m: u64) -> u64 {
    let m = m as i128;
    (((x % m) + m) % m) as u64
}
