//! Brute-force cross-check of the classification.
//!
//! No conjugacy-class or normalizer shortcuts and no cohomology coordinates:
//! every subgroup is processed, solution sets are materialized in full,
//! coboundary sets are built by subgroup closure, equivalence is decided by
//! canonical coset representatives and union-find across all subgroups with
//! a freshly written twist formula. Every materialized solution and every
//! twisted table is re-validated by direct evaluation of the coboundary
//! condition, so the one shared ingredient (the modular solver used to seed
//! solution sets, whose raw search space `M^(s−1)²` is out of reach) cannot
//! silently poison the check.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::classify::prepare_omega;
use crate::cochain::Cochain;
use crate::cohomology::{coboundary_matrix, cochain_to_vec};
use crate::error::{Error, Result};
use crate::group::{all_subgroups, FiniteGroup, Subgroup};

/// Totals from the brute-force classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub modulus: u64,
    pub total: u64,
    pub fiber_functors: u64,
    /// Per conjugacy class of subgroups, keyed by the canonical (minimal)
    /// conjugate's element list, the number of equivalence classes carried.
    pub class_counts: Vec<(Vec<usize>, u64)>,
}

/// Hard bound on materialized sets; the oracle is a desk-scale instrument.
const ORACLE_SET_CAP: usize = 2_000_000;

struct SubgroupContext {
    elements: Vec<usize>,
    /// Full `s × s` table vectors for every solution of `dβ = ω|_H`.
    solutions: BTreeSet<Vec<u64>>,
    /// Full-table vectors of every `k^×`-coboundary at the working modulus.
    coboundaries: BTreeSet<Vec<u64>>,
}

/// Direct evaluation: `(dβ)(a,b,c)` from a full `s × s` table.
fn d2_direct(
    group: &FiniteGroup,
    elements: &[usize],
    table: &[u64],
    m: u64,
    a: usize,
    b: usize,
    c: usize,
) -> u64 {
    let s = elements.len();
    let idx = |x: usize, y: usize| -> usize {
        let i = elements.binary_search(&x).expect("closed");
        let j = elements.binary_search(&y).expect("closed");
        i * s + j
    };
    let t1 = table[idx(b, c)];
    let t2 = table[idx(group.mul(a, b), c)];
    let t3 = table[idx(a, group.mul(b, c))];
    let t4 = table[idx(a, b)];
    (t1 + (m - t2) + t3 + (m - t4)) % m
}

/// Direct check that a full table solves `dβ = ω|_H`.
fn is_solution_direct(
    group: &FiniteGroup,
    omega: &Cochain,
    elements: &[usize],
    table: &[u64],
) -> bool {
    let m = omega.modulus();
    for &a in elements {
        for &b in elements {
            for &c in elements {
                let lhs = d2_direct(group, elements, table, m, a, b, c);
                let rhs = omega.get(&[a, b, c]).expect("omega on the whole group");
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Closure of a set of vectors under addition mod `m`, from the zero vector.
fn additive_closure(
    generators: &[Vec<u64>],
    width: usize,
    m: u64,
    cap: usize,
) -> Result<BTreeSet<Vec<u64>>> {
    let mut set = BTreeSet::new();
    set.insert(vec![0u64; width]);
    let mut frontier: Vec<Vec<u64>> = vec![vec![0u64; width]];
    while let Some(v) = frontier.pop() {
        for g in generators {
            let sum: Vec<u64> = v.iter().zip(g).map(|(&a, &b)| (a + b) % m).collect();
            if set.insert(sum.clone()) {
                if set.len() > cap {
                    return Err(Error::ClassCapExceeded {
                        required: set.len() as u64,
                        cap: cap as u64,
                    });
                }
                frontier.push(sum);
            }
        }
    }
    Ok(set)
}

/// All `k^×`-coboundary tables at modulus `m` on the given subgroup: the
/// closure of `d` images of level-`m` 1-cochains together with scaled-down
/// images of lifted 1-cochains whose coboundary lands in the scaled lattice.
fn coboundary_set(
    group: &FiniteGroup,
    elements: &[usize],
    m: u64,
    cap: usize,
) -> Result<BTreeSet<Vec<u64>>> {
    let s = elements.len();
    let lifted = m * s as u64;
    let identity = group.identity();
    let d1_full = |tau: &BTreeMap<usize, u64>, modulus: u64| -> Vec<u64> {
        // (dτ)(h,l) = τ(h) − τ(hl) + τ(l) on the full s×s table.
        let mut out = vec![0u64; s * s];
        for (i, &h) in elements.iter().enumerate() {
            for (j, &l) in elements.iter().enumerate() {
                let hl = group.mul(h, l);
                let th = *tau.get(&h).unwrap_or(&0);
                let tl = *tau.get(&l).unwrap_or(&0);
                let thl = *tau.get(&hl).unwrap_or(&0);
                out[i * s + j] = (th + (modulus - thl % modulus) + tl) % modulus;
            }
        }
        out
    };
    let mut generators: Vec<Vec<u64>> = Vec::new();
    // Plain coboundaries: d of each unit 1-cochain at modulus m.
    for &h in elements {
        if h == identity {
            continue;
        }
        let tau = BTreeMap::from([(h, 1u64)]);
        generators.push(d1_full(&tau, m));
    }
    // Lifted contributions: 1-cochains mod s whose coboundary vanishes mod s
    // lift to level m·s and scale down by s.
    let free: Vec<usize> = elements.iter().copied().filter(|&h| h != identity).collect();
    let lifted_kernel: Vec<BTreeMap<usize, u64>> = if s <= 1 {
        Vec::new()
    } else if (s as u64).pow(free.len() as u32) <= 4_000_000 {
        // Raw enumeration of (Z/s)^{s−1}.
        let mut found = Vec::new();
        let mut assignment = vec![0u64; free.len()];
        'outer: loop {
            let tau: BTreeMap<usize, u64> =
                free.iter().copied().zip(assignment.iter().copied()).collect();
            let image = d1_full(&tau, s as u64);
            if image.iter().all(|&v| v == 0) {
                found.push(tau);
            }
            let mut i = free.len();
            loop {
                if i == 0 {
                    break 'outer;
                }
                i -= 1;
                assignment[i] += 1;
                if assignment[i] < s as u64 {
                    continue 'outer;
                }
                assignment[i] = 0;
            }
        }
        found
    } else {
        // Too many raw candidates: take kernel generators from the modular
        // solver and re-validate each directly.
        let sub = group.subgroup(elements)?;
        let d1 = coboundary_matrix(group, &sub, 1, s as u64, u64::MAX)?;
        d1.kernel()
            .into_iter()
            .map(|k| {
                let tau: BTreeMap<usize, u64> =
                    free.iter().copied().zip(k.iter().copied()).collect();
                assert!(d1_full(&tau, s as u64).iter().all(|&v| v == 0));
                tau
            })
            .collect()
    };
    for tau in &lifted_kernel {
        let image = d1_full(tau, lifted);
        assert!(image.iter().all(|&v| v % s as u64 == 0));
        generators.push(image.iter().map(|&v| (v / s as u64) % m).collect());
    }
    additive_closure(&generators, s * s, m, cap)
}

/// Canonical representative of a table's coset modulo the coboundary set.
fn canonical_coset_rep(table: &[u64], cobs: &BTreeSet<Vec<u64>>, m: u64) -> Vec<u64> {
    let mut best: Option<Vec<u64>> = None;
    for c in cobs {
        let shifted: Vec<u64> = table.iter().zip(c).map(|(&a, &b)| (a + b) % m).collect();
        if best.as_ref().map_or(true, |b| &shifted < b) {
            best = Some(shifted);
        }
    }
    best.expect("coboundary set contains zero")
}

/// Fresh twist formula on full tables: the table of `ξ^g + Ω_g` on
/// `K = g⁻¹·L·g` from the table of ξ on `L`.
#[allow(clippy::too_many_arguments)]
fn twist_direct(
    group: &FiniteGroup,
    omega: &Cochain,
    source_elements: &[usize],
    source_table: &[u64],
    g: usize,
    target_elements: &[usize],
) -> Vec<u64> {
    let m = omega.modulus();
    let s_src = source_elements.len();
    let s = target_elements.len();
    let mut out = vec![0u64; s * s];
    for (i, &h) in target_elements.iter().enumerate() {
        let hg = group.conjugate(g, h);
        for (j, &l) in target_elements.iter().enumerate() {
            let lg = group.conjugate(g, l);
            let si = source_elements.binary_search(&hg).expect("conjugate lands in source");
            let sj = source_elements.binary_search(&lg).expect("conjugate lands in source");
            let xi = source_table[si * s_src + sj];
            let w1 = omega.get(&[g, h, l]).unwrap();
            let w2 = omega.get(&[hg, lg, g]).unwrap();
            let w3 = omega.get(&[hg, g, l]).unwrap();
            out[i * s + j] = (xi + w1 + w2 + (m - w3)) % m;
        }
    }
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Canonical key of a subgroup's conjugacy class: the minimal element list
/// among all conjugates.
fn conjugacy_key(group: &FiniteGroup, elements: &[usize]) -> Vec<usize> {
    let mut best = elements.to_vec();
    for g in 0..group.order() {
        let mut conj: Vec<usize> =
            elements.iter().map(|&h| group.conjugate(g, h)).collect();
        conj.sort_unstable();
        if conj < best {
            best = conj;
        }
    }
    best
}

/// Brute-force classification of `(G, ω)` at the session modulus.
pub fn classify_oracle(
    group: &FiniteGroup,
    omega: &Cochain,
    modulus: Option<u64>,
) -> Result<OracleReport> {
    let omega = prepare_omega(group, omega, modulus)?;
    let m = omega.modulus();
    let subs = all_subgroups(group);
    // Materialize per-subgroup solution sets and coboundary sets.
    let mut contexts: Vec<SubgroupContext> = Vec::with_capacity(subs.len());
    for sub in &subs {
        let elements = sub.elements().to_vec();
        let s = elements.len();
        let solutions = match seed_solution(group, &omega, sub)? {
            None => BTreeSet::new(),
            Some((base, kernel_gens)) => {
                let kernel = additive_closure(&kernel_gens, s * s, m, ORACLE_SET_CAP)?;
                let mut set = BTreeSet::new();
                for k in kernel {
                    let candidate: Vec<u64> =
                        base.iter().zip(&k).map(|(&a, &b)| (a + b) % m).collect();
                    assert!(
                        is_solution_direct(group, &omega, &elements, &candidate),
                        "solver produced a non-solution"
                    );
                    set.insert(candidate);
                }
                set
            }
        };
        let coboundaries = coboundary_set(group, &elements, m, ORACLE_SET_CAP)?;
        contexts.push(SubgroupContext { elements, solutions, coboundaries });
    }
    // Coset decomposition per subgroup; node = (subgroup index, coset rep).
    let mut node_ids: BTreeMap<(usize, Vec<u64>), usize> = BTreeMap::new();
    let mut nodes: Vec<(usize, Vec<u64>)> = Vec::new();
    for (i, ctx) in contexts.iter().enumerate() {
        if !ctx.solutions.is_empty() {
            assert_eq!(
                ctx.solutions.len() % ctx.coboundaries.len(),
                0,
                "solution set is a union of cosets"
            );
        }
        let mut claimed: BTreeSet<Vec<u64>> = BTreeSet::new();
        for table in &ctx.solutions {
            if claimed.contains(table) {
                continue;
            }
            let rep = canonical_coset_rep(table, &ctx.coboundaries, m);
            for c in &ctx.coboundaries {
                let member: Vec<u64> =
                    table.iter().zip(c).map(|(&a, &b)| (a + b) % m).collect();
                assert!(ctx.solutions.contains(&member), "coset leaves the solution set");
                claimed.insert(member);
            }
            let id = nodes.len();
            node_ids.insert((i, rep.clone()), id);
            nodes.push((i, rep));
        }
    }
    // Union across the twisted conjugation moves.
    let sub_index: BTreeMap<Vec<usize>, usize> = contexts
        .iter()
        .enumerate()
        .map(|(i, ctx)| (ctx.elements.clone(), i))
        .collect();
    let mut uf = UnionFind::new(nodes.len());
    for (id, (i, table)) in nodes.iter().enumerate() {
        let source = &contexts[*i];
        for g in 0..group.order() {
            let g_inv = group.inv(g);
            let mut target_elements: Vec<usize> =
                source.elements.iter().map(|&h| group.conjugate(g_inv, h)).collect();
            target_elements.sort_unstable();
            let j = *sub_index.get(&target_elements).expect("conjugate subgroup is listed");
            let twisted =
                twist_direct(group, &omega, &source.elements, table, g, &target_elements);
            assert!(
                is_solution_direct(group, &omega, &target_elements, &twisted),
                "twisted table must solve the target stratum"
            );
            let rep = canonical_coset_rep(&twisted, &contexts[j].coboundaries, m);
            let other = *node_ids.get(&(j, rep)).expect("twist lands on a known coset");
            uf.union(id, other);
        }
    }
    // Count components, overall and per conjugacy class / fiber stratum.
    let mut component_of: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for id in 0..nodes.len() {
        let root = uf.find(id);
        component_of.entry(root).or_default().push(id);
    }
    let mut per_class: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for sub in &subs {
        per_class.entry(conjugacy_key(group, sub.elements())).or_insert(0);
    }
    let mut fiber = 0u64;
    for members in component_of.values() {
        let any = members[0];
        let key = conjugacy_key(group, &contexts[nodes[any].0].elements);
        *per_class.get_mut(&key).expect("key precomputed") += 1;
        if members
            .iter()
            .any(|&id| contexts[nodes[id].0].elements.len() == group.order())
        {
            fiber += 1;
        }
    }
    let mut class_counts: Vec<(Vec<usize>, u64)> = per_class.into_iter().collect();
    class_counts.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    Ok(OracleReport {
        modulus: m,
        total: component_of.len() as u64,
        fiber_functors: fiber,
        class_counts,
    })
}

/// Base solution (full table) and kernel generators (full tables) for one
/// subgroup, from the modular solver. Raw enumeration of `M^(s−1)²` tables
/// is hopeless beyond tiny subgroups, so the seeds are borrowed and every
/// derived table is re-validated directly by the caller.
fn seed_solution(
    group: &FiniteGroup,
    omega: &Cochain,
    sub: &Subgroup,
) -> Result<Option<(Vec<u64>, Vec<Vec<u64>>)>> {
    let m = omega.modulus();
    let omega_h = omega.restrict(group, sub)?;
    let d2 = coboundary_matrix(group, sub, 2, m, u64::MAX)?;
    let target = cochain_to_vec(group, &omega_h)?;
    let Some(solution) = d2.solve(&target)? else {
        return Ok(None);
    };
    let expand = |vec: &[u64]| -> Vec<u64> {
        // Free coordinates to full s×s table.
        let s = sub.len();
        let identity = group.identity();
        let free: Vec<usize> = (0..s)
            .filter(|&i| sub.elements()[i] != identity)
            .collect();
        let f = free.len();
        let mut table = vec![0u64; s * s];
        for (coord, &v) in vec.iter().enumerate() {
            let (a, b) = (coord / f, coord % f);
            table[free[a] * s + free[b]] = v;
        }
        table
    };
    let base = expand(&solution.particular);
    let kernel = solution.kernel.iter().map(|k| expand(k)).collect();
    Ok(Some((base, kernel)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_matches_known_counts() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let z = Cochain::zero_on_group(&c2, 3, 1).unwrap();
        let report = classify_oracle(&c2, &z, None).unwrap();
        assert_eq!(report.total, 2);
        assert_eq!(report.fiber_functors, 1);

        let w = Cochain::cyclic_three_cocycle(2, 1, 2).unwrap();
        let report = classify_oracle(&c2, &w, Some(4)).unwrap();
        assert_eq!(report.total, 1);
        assert_eq!(report.fiber_functors, 0);
    }

    #[test]
    fn oracle_class_breakdown_symmetric_three() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let z = Cochain::zero_on_group(&g, 3, 1).unwrap();
        let report = classify_oracle(&g, &z, None).unwrap();
        assert_eq!(report.total, 4);
        assert_eq!(report.fiber_functors, 1);
        assert_eq!(report.class_counts.len(), 4);
        assert!(report.class_counts.iter().all(|(_, n)| *n == 1));
    }
}
