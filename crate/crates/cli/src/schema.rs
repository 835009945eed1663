//! JSON schemas for groups, cocycles, and reports, plus table rendering.
//!
//! Group numbering is bit-exact: the identity is element 0. Cocycle values
//! are sparse `[tuple..., value]` entries; omitted tuples are zero.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use modcat_core::classify::{ClassificationReport, StratumReport};
use modcat_core::cohomology::CohomologyGroup;
use modcat_core::datum::EquivalenceWitness;
use modcat_core::oracle::OracleReport;
use modcat_core::{Cochain, Error as CoreError, FiniteGroup, Subgroup};

/// CLI-level failure with the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub exit_code: i32,
}

impl CliError {
    pub fn validation(message: impl Into<String>) -> Self {
        CliError { message: message.into(), exit_code: 2 }
    }

    pub fn from_core(context: &str, err: CoreError) -> Self {
        let exit_code = match err {
            CoreError::ResourceCap { .. } | CoreError::ClassCapExceeded { .. } => 3,
            _ => 2,
        };
        CliError { message: format!("{context}: {err}"), exit_code }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Group construction specification.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic { n: usize },
    Dihedral { n: usize },
    Symmetric { n: usize },
    Product { factors: Vec<GroupSpec> },
    Cayley { cayley: Vec<Vec<usize>> },
    Perm { perm: Vec<Vec<usize>> },
}

impl GroupSpec {
    pub fn build(&self) -> CliResult<FiniteGroup> {
        let wrap = |r: Result<FiniteGroup, CoreError>| {
            r.map_err(|e| CliError::from_core("group", e))
        };
        match self {
            GroupSpec::Cyclic { n } => wrap(FiniteGroup::cyclic(*n)),
            GroupSpec::Dihedral { n } => wrap(FiniteGroup::dihedral(*n)),
            GroupSpec::Symmetric { n } => wrap(FiniteGroup::symmetric(*n)),
            GroupSpec::Product { factors } => {
                if factors.is_empty() {
                    return Err(CliError::validation("group: product needs factors"));
                }
                let mut acc = factors[0].build()?;
                for f in &factors[1..] {
                    acc = wrap(FiniteGroup::direct_product(&acc, &f.build()?))?;
                }
                Ok(acc)
            }
            GroupSpec::Cayley { cayley } => {
                let g = wrap(FiniteGroup::from_table(cayley))?;
                if g.identity() != 0 {
                    return Err(CliError::validation(
                        "group.cayley: identity must be element 0",
                    ));
                }
                Ok(g)
            }
            GroupSpec::Perm { perm } => {
                let degree = perm
                    .first()
                    .map(Vec::len)
                    .ok_or_else(|| CliError::validation("group.perm: needs generators"))?;
                wrap(FiniteGroup::from_permutation_generators(degree, perm))
            }
        }
    }
}

/// Cocycle specification: a literal `"zero"`, the cyclic degree-3 generator,
/// a sparse value table, or a derived cochain.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CocycleSpec {
    Literal(String),
    Generator {
        generator: String,
        n: usize,
        q: u64,
        #[serde(rename = "M")]
        m: u64,
    },
    Values {
        modulus: u64,
        degree: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        group: Option<GroupSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        subgroup: Option<Vec<usize>>,
        values: Vec<Vec<u64>>,
    },
    Inflate {
        inflate: Box<CocycleSpec>,
        projection: Vec<usize>,
    },
    Restrict {
        restrict: Box<CocycleSpec>,
        subgroup: Vec<usize>,
    },
    Conjugate {
        conjugate: Box<CocycleSpec>,
        by: usize,
    },
}

impl CocycleSpec {
    /// Builds the cochain in the context of a session group. `degree_hint`
    /// applies to the `"zero"` literal and bare value tables without an
    /// explicit degree conflict (3 for ω inputs, 2 for β inputs).
    pub fn build(
        &self,
        session: &FiniteGroup,
        degree_hint: usize,
        domain_hint: Option<&Subgroup>,
    ) -> CliResult<Cochain> {
        match self {
            CocycleSpec::Literal(word) if word == "zero" => {
                let sub = match domain_hint {
                    Some(s) => s.clone(),
                    None => session.whole_subgroup(),
                };
                Cochain::zero(&sub, degree_hint, 1)
                    .map_err(|e| CliError::from_core("cocycle", e))
            }
            CocycleSpec::Literal(word) => {
                Err(CliError::validation(format!("cocycle: unknown literal {word:?}")))
            }
            CocycleSpec::Generator { generator, n, q, m } => {
                if generator != "cyclic" {
                    return Err(CliError::validation(format!(
                        "cocycle.generator: unknown generator {generator:?}"
                    )));
                }
                Cochain::cyclic_three_cocycle(*n, *q, *m)
                    .map_err(|e| CliError::from_core("cocycle.generator", e))
            }
            CocycleSpec::Values { modulus, degree, group, subgroup, values } => {
                let owner = match group {
                    Some(spec) => spec.build()?,
                    None => session.clone(),
                };
                let sub = match (subgroup, domain_hint) {
                    (Some(elements), _) => owner
                        .subgroup(elements)
                        .map_err(|e| CliError::from_core("cocycle.subgroup", e))?,
                    (None, Some(hint)) => hint.clone(),
                    (None, None) => owner.whole_subgroup(),
                };
                let mut entries = Vec::with_capacity(values.len());
                for row in values {
                    if row.len() != degree + 1 {
                        return Err(CliError::validation(format!(
                            "cocycle.values: entry needs {} tuple slots plus a value",
                            degree
                        )));
                    }
                    let tuple: Vec<usize> =
                        row[..*degree].iter().map(|&v| v as usize).collect();
                    entries.push((tuple, row[*degree]));
                }
                Cochain::from_sparse(&owner, &sub, *degree, *modulus, &entries)
                    .map_err(|e| CliError::from_core("cocycle.values", e))
            }
            CocycleSpec::Inflate { inflate, projection } => {
                let inner_group = inflate.owning_group(session)?;
                let inner = inflate.build(&inner_group, degree_hint, None)?;
                inner
                    .inflate_along(session, &inner_group, projection)
                    .map_err(|e| CliError::from_core("cocycle.inflate", e))
            }
            CocycleSpec::Restrict { restrict, subgroup } => {
                let inner = restrict.build(session, degree_hint, None)?;
                let sub = session
                    .subgroup(subgroup)
                    .map_err(|e| CliError::from_core("cocycle.restrict", e))?;
                inner
                    .restrict(session, &sub)
                    .map_err(|e| CliError::from_core("cocycle.restrict", e))
            }
            CocycleSpec::Conjugate { conjugate, by } => {
                let inner = conjugate.build(session, degree_hint, None)?;
                inner
                    .conjugate_by(session, *by)
                    .map_err(|e| CliError::from_core("cocycle.conjugate", e))
            }
        }
    }

    /// The group an inner spec lives on (for inflation sources, which must
    /// name their own group).
    fn owning_group(&self, session: &FiniteGroup) -> CliResult<FiniteGroup> {
        match self {
            CocycleSpec::Generator { n, .. } => {
                FiniteGroup::cyclic(*n).map_err(|e| CliError::from_core("cocycle", e))
            }
            CocycleSpec::Values { group: Some(spec), .. } => spec.build(),
            CocycleSpec::Values { group: None, .. } | CocycleSpec::Literal(_) => {
                Ok(session.clone())
            }
            CocycleSpec::Inflate { .. }
            | CocycleSpec::Restrict { .. }
            | CocycleSpec::Conjugate { .. } => Ok(session.clone()),
        }
    }
}

/// Parses an argument that is either inline JSON, the literal `zero`, or a
/// path to a JSON file.
pub fn parse_arg<T: serde::de::DeserializeOwned>(raw: &str, what: &str) -> CliResult<T> {
    let text = if raw.trim_start().starts_with(['{', '[', '"']) || raw.trim() == "zero" {
        if raw.trim() == "zero" {
            "\"zero\"".to_string()
        } else {
            raw.to_string()
        }
    } else {
        std::fs::read_to_string(raw)
            .map_err(|e| CliError::validation(format!("{what}: cannot read {raw}: {e}")))?
    };
    serde_json::from_str(&text)
        .map_err(|e| CliError::validation(format!("{what}: malformed JSON: {e}")))
}

/// Sparse serialization of a cochain: sorted `[tuple..., value]` rows of the
/// nonzero entries, by parent element indices.
pub fn cochain_to_json(c: &Cochain) -> Value {
    let domain = c.domain();
    let s = domain.len();
    let degree = c.degree();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (flat, &v) in c.values().iter().enumerate() {
        if v == 0 {
            continue;
        }
        let mut idx = flat;
        let mut tuple = vec![0u64; degree];
        for slot in tuple.iter_mut().rev() {
            *slot = domain[idx % s] as u64;
            idx /= s;
        }
        tuple.push(v);
        rows.push(tuple);
    }
    rows.sort();
    serde_json::json!({
        "modulus": c.modulus(),
        "degree": degree,
        "values": rows,
    })
}

fn stratum_to_json(s: &StratumReport) -> Value {
    serde_json::json!({
        "subgroup": s.subgroup.elements(),
        "class_size": s.class_size,
        "obstructed": s.obstructed,
        "h3_coordinates": s.h3_coordinates,
        "h2_invariant_factors": s.h2_invariant_factors,
        "class_count": s.class_count,
        "orbit_count": s.orbit_count,
        "representatives": s.representatives.iter().map(|d| {
            serde_json::json!({ "beta": cochain_to_json(&d.beta) })
        }).collect::<Vec<_>>(),
    })
}

pub fn classify_report_to_json(
    group: &Value,
    omega: &Value,
    report: &ClassificationReport,
) -> Value {
    serde_json::json!({
        "group": group,
        "omega": omega,
        "modulus": report.modulus,
        "strata": report.strata.iter().map(stratum_to_json).collect::<Vec<_>>(),
        "total": report.total,
        "fiber_functors": report.fiber_functors,
    })
}

pub fn fiber_report_to_json(
    group: &Value,
    omega: &Value,
    modulus: u64,
    count: u64,
    reps: &[modcat_core::AlgebraDatum],
) -> Value {
    serde_json::json!({
        "group": group,
        "omega": omega,
        "modulus": modulus,
        "fiber_functors": count,
        "representatives": reps.iter().map(|d| {
            serde_json::json!({ "beta": cochain_to_json(&d.beta) })
        }).collect::<Vec<_>>(),
    })
}

pub fn equiv_report_to_json(
    modulus: u64,
    witness: &Option<EquivalenceWitness>,
) -> Value {
    serde_json::json!({
        "modulus": modulus,
        "equivalent": witness.is_some(),
        "witness": witness.as_ref().map(|w| serde_json::json!({
            "g": w.g,
            "tau": cochain_to_json(&w.tau),
        })),
    })
}

pub fn cohomology_report_to_json(sub: &Subgroup, cg: &CohomologyGroup) -> Value {
    serde_json::json!({
        "subgroup": sub.elements(),
        "degree": cg.degree(),
        "modulus": cg.modulus(),
        "invariant_factors": cg.invariant_factors(),
        "generators": cg.class_generators().iter().map(cochain_to_json).collect::<Vec<_>>(),
    })
}

pub fn oracle_report_to_json(report: &OracleReport) -> Value {
    serde_json::json!({
        "modulus": report.modulus,
        "total": report.total,
        "fiber_functors": report.fiber_functors,
        "strata": report.class_counts.iter().map(|(key, n)| serde_json::json!({
            "subgroup": key,
            "orbit_count": n,
        })).collect::<Vec<_>>(),
    })
}

/// Structural re-validation of an emitted classification report: schema
/// fields present and internally consistent. Run before printing.
pub fn validate_classify_json(v: &Value) -> Result<(), String> {
    let obj = v.as_object().ok_or("report must be an object")?;
    for key in ["group", "omega", "modulus", "strata", "total", "fiber_functors"] {
        if !obj.contains_key(key) {
            return Err(format!("missing field {key}"));
        }
    }
    let strata = obj["strata"].as_array().ok_or("strata must be an array")?;
    let mut sum = 0u64;
    for s in strata {
        let so = s.as_object().ok_or("stratum must be an object")?;
        for key in [
            "subgroup",
            "obstructed",
            "h2_invariant_factors",
            "class_count",
            "orbit_count",
            "representatives",
        ] {
            if !so.contains_key(key) {
                return Err(format!("stratum missing field {key}"));
            }
        }
        let orbit = so["orbit_count"].as_u64().ok_or("orbit_count must be integral")?;
        let reps = so["representatives"].as_array().ok_or("representatives array")?;
        if reps.len() as u64 != orbit {
            return Err("one representative per orbit".into());
        }
        sum += orbit;
    }
    if Some(sum) != obj["total"].as_u64() {
        return Err("total must equal the sum of orbit counts".into());
    }
    Ok(())
}

/// Field-presence validation for the smaller reports.
pub fn validate_fields(v: &Value, fields: &[&str]) -> Result<(), String> {
    let obj = v.as_object().ok_or("report must be an object")?;
    for key in fields {
        if !obj.contains_key(*key) {
            return Err(format!("missing field {key}"));
        }
    }
    Ok(())
}

/// Aligned-table projection of the classification report.
pub fn classify_report_to_table(report: &ClassificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "modulus: {}", report.modulus);
    let mut rows: Vec<[String; 5]> = vec![[
        "subgroup".into(),
        "obstructed".into(),
        "H2".into(),
        "classes".into(),
        "orbits".into(),
    ]];
    for s in &report.strata {
        rows.push([
            format!("{:?}", s.subgroup.elements()),
            if s.obstructed { "yes".into() } else { "no".into() },
            if s.h2_invariant_factors.is_empty() {
                "1".into()
            } else {
                s.h2_invariant_factors
                    .iter()
                    .map(|d| format!("Z/{d}"))
                    .collect::<Vec<_>>()
                    .join(" x ")
            },
            s.class_count.to_string(),
            s.orbit_count.to_string(),
        ]);
    }
    let mut widths = [0usize; 5];
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    let _ = writeln!(out, "total: {}", report.total);
    let _ = writeln!(out, "fiber_functors: {}", report.fiber_functors);
    out
}

/// Key/value table for small reports.
pub fn simple_table(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in pairs {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}

/// Comparison of the fast classification against the oracle, per conjugacy
/// class of subgroups.
pub fn reports_agree(report: &ClassificationReport, oracle: &OracleReport) -> bool {
    if report.total != oracle.total || report.fiber_functors != oracle.fiber_functors {
        return false;
    }
    let fast: BTreeMap<Vec<usize>, u64> = report
        .strata
        .iter()
        .map(|s| (s.subgroup.elements().to_vec(), s.orbit_count))
        .collect();
    let slow: BTreeMap<Vec<usize>, u64> =
        oracle.class_counts.iter().cloned().collect();
    fast == slow
}
