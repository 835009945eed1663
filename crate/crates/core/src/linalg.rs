//! Exact linear algebra over `Z/M` and over `ℤ`.
//!
//! Gaussian elimination is unsound over `Z/M` for composite `M`, so
//! solvability and kernels go through the Howell form of the row module
//! (gcd pivots that divide `M`, plus annihilator rows, which together
//! represent every "leading zeros" submodule of the span). Quotient
//! structure — invariant factors of finitely presented abelian groups —
//! goes through integer Smith normal form with tracked column transforms.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Dense matrix over `Z/M`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularMatrix {
    rows: usize,
    cols: usize,
    modulus: u64,
    entries: Vec<u64>,
}

/// A particular solution of `A·x = b` together with generators of the
/// solution lattice `{x : A·x = 0}` as a `Z/M`-module.
#[derive(Debug, Clone)]
pub struct LinearSolution {
    pub particular: Vec<u64>,
    pub kernel: Vec<Vec<u64>>,
}

impl ModularMatrix {
    pub fn zeros(rows: usize, cols: usize, modulus: u64) -> Self {
        assert!(modulus >= 1);
        ModularMatrix { rows, cols, modulus, entries: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<u64>], cols: usize, modulus: u64) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols, modulus);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch);
            }
            for (j, &v) in row.iter().enumerate() {
                m.entries[i * cols + j] = v % modulus;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v % self.modulus;
    }

    /// `A·x` for a column vector `x` of length `cols`.
    pub fn apply(&self, x: &[u64]) -> Result<Vec<u64>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch);
        }
        let m = self.modulus as u128;
        let mut out = vec![0u64; self.rows];
        for (r, slot) in out.iter_mut().enumerate() {
            let mut acc: u128 = 0;
            for c in 0..self.cols {
                acc += self.get(r, c) as u128 * x[c] as u128 % m;
            }
            *slot = (acc % m) as u64;
        }
        Ok(out)
    }

    /// Builds the Howell form of the augmented row module once, so that many
    /// right-hand sides can be solved against the same matrix.
    pub fn prepare_solver(&self) -> PreparedSolver {
        let m = self.modulus;
        let (head, tail) = (self.rows, self.cols);
        // Row i of the workspace is [column i of A | e_i].
        let mut basis = HowellBasis::new(head + tail, m);
        for i in 0..self.cols {
            let mut w = vec![0u64; head + tail];
            for r in 0..self.rows {
                w[r] = self.get(r, i);
            }
            w[head + i] = 1 % m;
            basis.insert(w);
        }
        basis.finish();
        PreparedSolver { head, tail, modulus: m, rows: basis.rows }
    }

    /// Solves `A·x = b` over `Z/M`.
    ///
    /// Returns `None` when unsolvable; otherwise one particular solution and
    /// a generating set of the kernel, obtained from the Howell form of the
    /// augmented row module. Every solution is `particular` plus a `Z/M`
    /// combination of the kernel generators.
    pub fn solve(&self, b: &[u64]) -> Result<Option<LinearSolution>> {
        let solver = self.prepare_solver();
        Ok(solver.solve(b)?.map(|particular| LinearSolution {
            particular,
            kernel: solver.kernel(),
        }))
    }

    /// Generators of `{x : A·x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        self.prepare_solver().kernel()
    }
}

/// Reusable Howell-form solver for a fixed matrix.
#[derive(Debug)]
pub struct PreparedSolver {
    head: usize,
    tail: usize,
    modulus: u64,
    rows: Vec<Vec<u64>>,
}

impl PreparedSolver {
    /// One particular solution of `A·x = b`, or `None`.
    pub fn solve(&self, b: &[u64]) -> Result<Option<Vec<u64>>> {
        if b.len() != self.head {
            return Err(Error::DimensionMismatch);
        }
        let m = self.modulus;
        // Greedy reduction of [b | 0] against pivots in the head columns.
        let mut v: Vec<u64> = b.iter().map(|&x| x % m).collect();
        v.extend(core::iter::repeat_n(0, self.tail));
        for row in &self.rows {
            let j = leading(row);
            if j >= self.head {
                break;
            }
            if v[j] == 0 {
                continue;
            }
            let p = row[j];
            if v[j] % p != 0 {
                return Ok(None);
            }
            let q = v[j] / p;
            sub_scaled(&mut v, row, q, m);
        }
        if v[..self.head].iter().any(|&x| x != 0) {
            return Ok(None);
        }
        Ok(Some(v[self.head..].iter().map(|&x| (m - x) % m).collect()))
    }

    /// Generators of `{x : A·x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        self.rows
            .iter()
            .filter(|row| row[..self.head].iter().all(|&v| v == 0))
            .map(|row| row[self.head..].to_vec())
            .filter(|v| v.iter().any(|&x| x != 0))
            .collect()
    }
}

/// Incrementally built Howell basis of a row module over `Z/M`.
struct HowellBasis {
    width: usize,
    modulus: u64,
    /// Sorted by leading column; each leading entry divides the modulus.
    rows: Vec<Vec<u64>>,
}

impl HowellBasis {
    fn new(width: usize, modulus: u64) -> Self {
        HowellBasis { width, modulus, rows: Vec::new() }
    }

    fn pivot_position(&self, col: usize) -> core::result::Result<usize, usize> {
        self.rows.binary_search_by(|row| leading(row).cmp(&col))
    }

    fn insert(&mut self, v: Vec<u64>) {
        let m = self.modulus;
        let mut work = vec![v];
        while let Some(mut v) = work.pop() {
            loop {
                let j = leading(&v);
                if j == self.width {
                    break;
                }
                match self.pivot_position(j) {
                    Err(pos) => {
                        // New pivot column: stabilize so the pivot divides M,
                        // then spawn its annihilator multiple.
                        let (unit, d) = stabilize(v[j], m);
                        scale(&mut v, unit, m);
                        debug_assert_eq!(v[j], d % m);
                        let ann = m / d;
                        if ann > 1 {
                            let mut spawn = v.clone();
                            scale(&mut spawn, ann % m, m);
                            work.push(spawn);
                        }
                        self.rows.insert(pos, v);
                        break;
                    }
                    Ok(pos) => {
                        let p = self.rows[pos][j];
                        if v[j] % p == 0 {
                            let q = v[j] / p;
                            let row = self.rows[pos].clone();
                            sub_scaled(&mut v, &row, q, m);
                        } else {
                            // Combine to the gcd pivot and requeue the
                            // displaced remainders.
                            let (g, s, t) = xgcd(p as i128, v[j] as i128);
                            let g = g as u64;
                            let s = modfit(s, m);
                            let t = modfit(t, m);
                            let old = self.rows[pos].clone();
                            let mut new_row = vec![0u64; self.width];
                            for (slot, (&a, &b)) in
                                new_row.iter_mut().zip(old.iter().zip(v.iter()))
                            {
                                *slot = ((a as u128 * s as u128 + b as u128 * t as u128)
                                    % m as u128) as u64;
                            }
                            debug_assert_eq!(new_row[j] % g, 0);
                            debug_assert_eq!(new_row[j], g % m);
                            let mut old_reduced = old;
                            sub_scaled(&mut old_reduced, &new_row, p / g, m);
                            let q = v[j] / g;
                            sub_scaled(&mut v, &new_row, q, m);
                            let ann = m / gcd(g, m);
                            if ann > 1 {
                                let mut spawn = new_row.clone();
                                scale(&mut spawn, ann % m, m);
                                work.push(spawn);
                            }
                            self.rows[pos] = new_row;
                            work.push(old_reduced);
                        }
                    }
                }
            }
        }
    }

    /// Reduces entries above each pivot modulo the pivot.
    fn finish(&mut self) {
        for pos in 0..self.rows.len() {
            let j = leading(&self.rows[pos]);
            let p = self.rows[pos][j];
            let pivot_row = self.rows[pos].clone();
            for other in 0..pos {
                let q = self.rows[other][j] / p;
                if q > 0 {
                    sub_scaled(&mut self.rows[other], &pivot_row, q, self.modulus);
                }
            }
        }
    }
}

#[inline]
fn leading(row: &[u64]) -> usize {
    row.iter().position(|&v| v != 0).unwrap_or(row.len())
}

fn scale(row: &mut [u64], k: u64, m: u64) {
    for v in row.iter_mut() {
        *v = (*v as u128 * k as u128 % m as u128) as u64;
    }
}

fn sub_scaled(target: &mut [u64], source: &[u64], k: u64, m: u64) {
    let k = k % m;
    for (t, &s) in target.iter_mut().zip(source) {
        let sub = s as u128 * k as u128 % m as u128;
        *t = ((*t as u128 + m as u128 - sub) % m as u128) as u64;
    }
}

fn modfit(x: i128, m: u64) -> u64 {
    let m = m as i128;
    (((x % m) + m) % m) as u64
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Extended gcd: returns `(g, s, t)` with `s·a + t·b = g`.
fn xgcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = xgcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

/// Finds a unit `u` with `u·a ≡ gcd(a, M) (mod M)`; returns `(u, gcd)`.
fn stabilize(a: u64, m: u64) -> (u64, u64) {
    let a = a % m;
    debug_assert!(a != 0);
    let d = gcd(a, m);
    let step = m / d;
    let mut e = (a / d) % m;
    while gcd(e, m) != 1 {
        e = (e + step) % m;
    }
    let (_, s, _) = xgcd(e as i128, m as i128);
    let u = modfit(s, m);
    debug_assert_eq!(u as u128 * a as u128 % m as u128, (d % m) as u128);
    (u, d)
}

/// Smith normal form data for an integer relation matrix.
///
/// For relations `R` (rows) on `k` generator symbols, `diag` holds the
/// diagonal of `U·R·V` (divisibility chain), and `col_transform`/`col_inverse`
/// are `V` and `V⁻¹`. The presented group is `⊕ ℤ/diag[j]`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diag: Vec<i128>,
    pub col_transform: Vec<Vec<i128>>,
    pub col_inverse: Vec<Vec<i128>>,
}

/// Integer Smith normal form of `relations` (each row length `k`), tracking
/// only the column transform and its inverse; the row transform is not needed
/// for quotient-group presentations.
pub fn smith_form(relations: &[Vec<i128>], k: usize) -> SmithForm {
    let mut w: Vec<Vec<i128>> = relations.to_vec();
    for row in &w {
        assert_eq!(row.len(), k);
    }
    let rows = w.len();
    let mut v = identity(k);
    let mut vinv = identity(k);
    let steps = k.min(rows);
    let mut t = 0;
    while t < steps {
        // Find the minimal-magnitude nonzero entry in the trailing region.
        let Some((mut pi, mut pj)) = min_abs_entry(&w, t) else { break };
        loop {
            w.swap(t, pi);
            if pj != t {
                swap_cols(&mut w, &mut v, &mut vinv, t, pj);
            }
            // Euclidean elimination below the pivot.
            let mut dirty = false;
            for r in t + 1..rows {
                while w[r][t] != 0 {
                    let q = w[r][t] / w[t][t];
                    if q != 0 {
                        for c in t..k {
                            w[r][c] -= q * w[t][c];
                        }
                    }
                    if w[r][t] != 0 {
                        w.swap(r, t);
                        dirty = true;
                    }
                }
            }
            // Euclidean elimination right of the pivot.
            for c in t + 1..k {
                while w[t][c] != 0 {
                    let q = w[t][c] / w[t][t];
                    if q != 0 {
                        add_col(&mut w, &mut v, &mut vinv, c, t, -q);
                    }
                    if w[t][c] != 0 {
                        swap_cols(&mut w, &mut v, &mut vinv, c, t);
                        dirty = true;
                    }
                }
            }
            let col_clear = (t + 1..rows).all(|r| w[r][t] == 0);
            let row_clear = (t + 1..k).all(|c| w[t][c] == 0);
            if !(col_clear && row_clear) || dirty {
                pi = t;
                pj = t;
                continue;
            }
            // Pivot must divide the remaining region.
            let d = w[t][t];
            let mut offender = None;
            'scan: for r in t + 1..rows {
                for c in t + 1..k {
                    if w[r][c] % d != 0 {
                        offender = Some(r);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(r) => {
                    for c in t..k {
                        let add = w[r][c];
                        w[t][c] += add;
                    }
                    pi = t;
                    pj = t;
                }
                None => break,
            }
        }
        if w[t][t] < 0 {
            negate_col(&mut w, &mut v, &mut vinv, t);
        }
        t += 1;
    }
    let mut diag = vec![0i128; k];
    for (i, d) in diag.iter_mut().enumerate().take(steps.min(k)) {
        if i < rows {
            *d = w[i][i];
        }
    }
    debug_assert!(check_chain(&diag));
    SmithForm { diag, col_transform: v, col_inverse: vinv }
}

fn check_chain(diag: &[i128]) -> bool {
    for pair in diag.windows(2) {
        if pair[0] == 0 && pair[1] != 0 {
            return false;
        }
        if pair[0] != 0 && pair[1] % pair[0] != 0 {
            return false;
        }
    }
    true
}

fn min_abs_entry(w: &[Vec<i128>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, i128)> = None;
    for (r, row) in w.iter().enumerate().skip(t) {
        for (c, &x) in row.iter().enumerate().skip(t) {
            if x != 0 {
                let a = x.abs();
                if best.map_or(true, |(_, _, b)| a < b) {
                    best = Some((r, c, a));
                }
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}

fn identity(k: usize) -> Vec<Vec<i128>> {
    (0..k)
        .map(|i| (0..k).map(|j| if i == j { 1 } else { 0 }).collect())
        .collect()
}

fn swap_cols(
    w: &mut [Vec<i128>],
    v: &mut [Vec<i128>],
    vinv: &mut [Vec<i128>],
    a: usize,
    b: usize,
) {
    for row in w.iter_mut() {
        row.swap(a, b);
    }
    for row in v.iter_mut() {
        row.swap(a, b);
    }
    vinv.swap(a, b);
}

/// `col_c += q · col_t` on the working matrix and `V`; `row_t -= q · row_c`
/// on `V⁻¹`.
fn add_col(
    w: &mut [Vec<i128>],
    v: &mut [Vec<i128>],
    vinv: &mut [Vec<i128>],
    c: usize,
    t: usize,
    q: i128,
) {
    for row in w.iter_mut() {
        row[c] += q * row[t];
    }
    for row in v.iter_mut() {
        row[c] += q * row[t];
    }
    for j in 0..vinv[t].len() {
        let sub = q * vinv[c][j];
        vinv[t][j] -= sub;
    }
}

fn negate_col(w: &mut [Vec<i128>], v: &mut [Vec<i128>], vinv: &mut [Vec<i128>], t: usize) {
    for row in w.iter_mut() {
        row[t] = -row[t];
    }
    for row in v.iter_mut() {
        row[t] = -row[t];
    }
    for x in vinv[t].iter_mut() {
        *x = -*x;
    }
}
