//! Tone systems and the relation identifying tones that share an interval
//! to some common third tone.

use cat_core::{Partition, ValidationReport};
use group_action::{AnnotationGroup, GroupElem};
use serde_json::{json, Value};

use crate::error::PartialError;

/// Tones with an interval `delta[a][b]` from `a` to `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToneSystem {
    pub tones: Vec<String>,
    pub group: AnnotationGroup,
    pub delta: Vec<Vec<GroupElem>>,
}

impl ToneSystem {
    /// `delta(a, b) = pos(b) pos(a)^-1`.
    pub fn from_positions(
        tones: Vec<String>,
        group: AnnotationGroup,
        positions: &[GroupElem],
    ) -> Result<Self, PartialError> {
        if tones.len() != positions.len() {
            return Err(PartialError::InvalidToneSystem("one position per tone".into()));
        }
        if let Some(p) = positions.iter().find(|p| !group.contains(p)) {
            return Err(PartialError::InvalidToneSystem(format!(
                "position {p:?} outside the interval group"
            )));
        }
        let delta = positions
            .iter()
            .map(|a| positions.iter().map(|b| group.div(b, a)).collect())
            .collect();
        Ok(Self { tones, group, delta })
    }

    /// Every element of a finite group is a tone.
    pub fn from_group(group: AnnotationGroup) -> Result<Self, PartialError> {
        let elems = group
            .enumerate()
            .ok_or_else(|| PartialError::InvalidToneSystem("interval group must be finite".into()))?;
        let names = elems.iter().map(|e| group.render(e)).collect();
        Self::from_positions(names, group, &elems)
    }

    pub fn len(&self) -> usize {
        self.tones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tones.is_empty()
    }

    pub fn to_json_value(&self) -> Value {
        let delta: Vec<Vec<Value>> = self
            .delta
            .iter()
            .map(|row| row.iter().map(|e| self.group.elem_to_json(e)).collect())
            .collect();
        json!({"tones": self.tones, "group": self.group.to_json(), "delta": delta})
    }

    pub fn from_json_value(v: &Value) -> Result<Self, PartialError> {
        let bad = |m: &str| PartialError::Malformed(format!("tone system: {m}"));
        let tones: Vec<String> = serde_json::from_value(v["tones"].clone()).map_err(|e| bad(&e.to_string()))?;
        let group = AnnotationGroup::from_json(&v["group"]).map_err(|e| bad(&e.to_string()))?;
        let rows = v["delta"].as_array().ok_or_else(|| bad("delta must be a matrix"))?;
        let mut delta = Vec::new();
        for row in rows {
            let row = row.as_array().ok_or_else(|| bad("delta must be a matrix"))?;
            delta.push(
                row.iter()
                    .map(|e| group.elem_from_json(e).map_err(|e| bad(&e.to_string())))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        Ok(Self { tones, group, delta })
    }

    /// Neutral self-intervals and `delta(a,c) = delta(b,c) delta(a,b)`.
    pub fn check(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        let n = self.len();
        if self.delta.len() != n || self.delta.iter().any(|row| row.len() != n) {
            r.push("delta-shape", vec![format!("{n} tones")]);
            return r;
        }
        for (a, row) in self.delta.iter().enumerate() {
            if !self.group.is_neutral(&row[a]) {
                r.push("delta-neutral", vec![self.tones[a].clone()]);
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.delta[a][c] != self.group.mul(&self.delta[b][c], &self.delta[a][b]) {
                        r.push(
                            "delta-cocycle",
                            vec![self.tones[a].clone(), self.tones[b].clone(), self.tones[c].clone()],
                        );
                    }
                }
            }
        }
        r
    }

    /// `a ~ b` iff some tone `c` has `delta(a,c) = delta(b,c)`, as a matrix.
    pub fn sigma_relation(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| (0..n).any(|c| self.delta[a][c] == self.delta[b][c]))
                    .collect()
            })
            .collect()
    }
}

/// Violations of reflexivity, symmetry or transitivity of `rel`.
pub fn check_equivalence(rel: &[Vec<bool>]) -> ValidationReport {
    let mut r = ValidationReport::default();
    let n = rel.len();
    for a in 0..n {
        if !rel[a][a] {
            r.push("reflexive", vec![a.to_string()]);
        }
        for b in 0..n {
            if rel[a][b] && !rel[b][a] {
                r.push("symmetric", vec![a.to_string(), b.to_string()]);
            }
            for c in 0..n {
                if rel[a][b] && rel[b][c] && !rel[a][c] {
                    r.push("transitive", vec![a.to_string(), b.to_string(), c.to_string()]);
                }
            }
        }
    }
    r
}

/// Classes of the sigma relation, after checking it is an equivalence.
pub fn sigma_classes(t: &ToneSystem) -> Result<Partition, PartialError> {
    let report = t.check();
    if let Some(v) = report.violations.first() {
        return Err(PartialError::InvalidToneSystem(v.to_string()));
    }
    let rel = t.sigma_relation();
    let eq = check_equivalence(&rel);
    if let Some(v) = eq.violations.first() {
        return Err(PartialError::InvalidToneSystem(format!(
            "sigma is not an equivalence: {v}"
        )));
    }
    let reps: Vec<usize> = (0..t.len())
        .map(|a| (0..t.len()).find(|&b| rel[a][b]).unwrap_or(a))
        .collect();
    Ok(Partition::from_representatives(&reps))
}
