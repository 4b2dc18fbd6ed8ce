use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::ActionError;
use crate::group::FiniteGroup;

/// Element of an [`AnnotationGroup`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElem {
    Finite(usize),
    /// Free coordinates followed by torsion coordinates.
    Vector(Vec<i64>),
}

impl GroupElem {
    pub fn index(&self) -> usize {
        match self {
            GroupElem::Finite(i) => *i,
            GroupElem::Vector(_) => panic!("vector element has no index"),
        }
    }

    pub fn coords(&self) -> &[i64] {
        match self {
            GroupElem::Vector(v) => v,
            GroupElem::Finite(_) => panic!("finite element has no coordinates"),
        }
    }
}

/// Codomain group of an annotation: a finite group given by its table, or a
/// finitely generated abelian group Z^free_rank x Z_n1 x ... x Z_nk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnnotationGroup {
    Finite(FiniteGroup),
    Abelian { free_rank: usize, torsion: Vec<i64> },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum GroupDoc {
    #[serde(rename = "finite")]
    Finite {
        elements: Vec<String>,
        mul: Vec<[String; 3]>,
    },
    #[serde(rename = "fg-abelian")]
    Abelian {
        free_rank: usize,
        #[serde(default)]
        torsion: Vec<i64>,
    },
}

impl AnnotationGroup {
    pub fn free(rank: usize) -> Self {
        AnnotationGroup::Abelian {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn abelian(free_rank: usize, torsion: Vec<i64>) -> Result<Self, ActionError> {
        if torsion.iter().any(|&n| n < 1) {
            return Err(ActionError::InvalidGroup("torsion orders must be positive".into()));
        }
        Ok(AnnotationGroup::Abelian { free_rank, torsion })
    }

    pub fn is_finite(&self) -> bool {
        match self {
            AnnotationGroup::Finite(_) => true,
            AnnotationGroup::Abelian { free_rank, .. } => *free_rank == 0,
        }
    }

    fn dim(&self) -> usize {
        match self {
            AnnotationGroup::Finite(_) => 0,
            AnnotationGroup::Abelian { free_rank, torsion } => free_rank + torsion.len(),
        }
    }

    /// Reduces torsion coordinates into `[0, n)`.
    pub fn normalize(&self, e: GroupElem) -> GroupElem {
        match (self, e) {
            (AnnotationGroup::Abelian { free_rank, torsion }, GroupElem::Vector(mut v)) => {
                for (k, &n) in torsion.iter().enumerate() {
                    v[free_rank + k] = v[free_rank + k].rem_euclid(n);
                }
                GroupElem::Vector(v)
            }
            (_, e) => e,
        }
    }

    pub fn neutral(&self) -> GroupElem {
        match self {
            AnnotationGroup::Finite(g) => GroupElem::Finite(g.neutral()),
            AnnotationGroup::Abelian { .. } => GroupElem::Vector(vec![0; self.dim()]),
        }
    }

    pub fn is_neutral(&self, e: &GroupElem) -> bool {
        *e == self.neutral()
    }

    pub fn mul(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        match (self, a, b) {
            (AnnotationGroup::Finite(g), GroupElem::Finite(x), GroupElem::Finite(y)) => {
                GroupElem::Finite(g.mul(*x, *y))
            }
            (AnnotationGroup::Abelian { .. }, GroupElem::Vector(x), GroupElem::Vector(y)) => {
                self.normalize(GroupElem::Vector(x.iter().zip(y).map(|(p, q)| p + q).collect()))
            }
            _ => panic!("element kind does not match group kind"),
        }
    }

    pub fn inv(&self, a: &GroupElem) -> GroupElem {
        match (self, a) {
            (AnnotationGroup::Finite(g), GroupElem::Finite(x)) => GroupElem::Finite(g.inv(*x)),
            (AnnotationGroup::Abelian { .. }, GroupElem::Vector(x)) => {
                self.normalize(GroupElem::Vector(x.iter().map(|p| -p).collect()))
            }
            _ => panic!("element kind does not match group kind"),
        }
    }

    /// `a * b^-1`.
    pub fn div(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        self.mul(a, &self.inv(b))
    }

    /// True iff `e` has the right shape and canonical torsion coordinates.
    pub fn contains(&self, e: &GroupElem) -> bool {
        match (self, e) {
            (AnnotationGroup::Finite(g), GroupElem::Finite(i)) => *i < g.order(),
            (AnnotationGroup::Abelian { .. }, GroupElem::Vector(v)) => {
                v.len() == self.dim() && self.normalize(e.clone()) == *e
            }
            _ => false,
        }
    }

    /// All elements; `None` for infinite groups.
    pub fn enumerate(&self) -> Option<Vec<GroupElem>> {
        match self {
            AnnotationGroup::Finite(g) => Some(g.elements().map(GroupElem::Finite).collect()),
            AnnotationGroup::Abelian { free_rank, torsion } => {
                if *free_rank > 0 {
                    return None;
                }
                let mut out = vec![Vec::new()];
                for &n in torsion {
                    out = out
                        .into_iter()
                        .flat_map(|p: Vec<i64>| {
                            (0..n).map(move |k| {
                                let mut q = p.clone();
                                q.push(k);
                                q
                            })
                        })
                        .collect();
                }
                Some(out.into_iter().map(GroupElem::Vector).collect())
            }
        }
    }

    /// The group as a multiplication table, with elements in
    /// [`AnnotationGroup::enumerate`] order; `None` for infinite groups.
    pub fn to_finite_group(&self) -> Option<FiniteGroup> {
        if let AnnotationGroup::Finite(g) = self {
            return Some(g.clone());
        }
        let elems = self.enumerate()?;
        let index: std::collections::HashMap<&GroupElem, usize> =
            elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let names = elems.iter().map(|e| self.render(e)).collect();
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&self.mul(a, b)]).collect())
            .collect();
        Some(FiniteGroup::from_table(names, table).expect("finite abelian groups are groups"))
    }

    /// Position of `e` in [`AnnotationGroup::to_finite_group`] order.
    pub fn finite_index(&self, e: &GroupElem) -> Option<usize> {
        match (self, e) {
            (AnnotationGroup::Finite(_), GroupElem::Finite(i)) => Some(*i),
            _ => self.enumerate()?.iter().position(|x| x == e),
        }
    }

    /// Short identifier: element name, a plain integer in rank one, or
    /// `(a,b,...)`.
    pub fn render(&self, e: &GroupElem) -> String {
        match (self, e) {
            (AnnotationGroup::Finite(g), GroupElem::Finite(i)) => g.name(*i).to_string(),
            (_, GroupElem::Vector(v)) if v.len() == 1 => v[0].to_string(),
            (_, GroupElem::Vector(v)) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            }
            _ => panic!("element kind does not match group kind"),
        }
    }

    pub fn elem_to_json(&self, e: &GroupElem) -> Value {
        match (self, e) {
            (AnnotationGroup::Finite(g), GroupElem::Finite(i)) => json!(g.name(*i)),
            (_, GroupElem::Vector(v)) => json!(v),
            _ => panic!("element kind does not match group kind"),
        }
    }

    pub fn elem_from_json(&self, v: &Value) -> Result<GroupElem, ActionError> {
        let e = match self {
            AnnotationGroup::Finite(g) => {
                let name = v
                    .as_str()
                    .ok_or_else(|| ActionError::InvalidGroup(format!("expected element name, got {v}")))?;
                GroupElem::Finite(
                    g.element(name)
                        .ok_or_else(|| ActionError::InvalidGroup(format!("unknown element `{name}`")))?,
                )
            }
            AnnotationGroup::Abelian { .. } => {
                let coords: Vec<i64> =
                    serde_json::from_value(v.clone()).map_err(|e| ActionError::InvalidGroup(e.to_string()))?;
                if coords.len() != self.dim() {
                    return Err(ActionError::InvalidGroup(format!(
                        "expected {} coordinates",
                        self.dim()
                    )));
                }
                self.normalize(GroupElem::Vector(coords))
            }
        };
        Ok(e)
    }

    pub fn to_json(&self) -> Value {
        let doc = match self {
            AnnotationGroup::Finite(g) => GroupDoc::Finite {
                elements: g.names().to_vec(),
                mul: g.triples(),
            },
            AnnotationGroup::Abelian { free_rank, torsion } => GroupDoc::Abelian {
                free_rank: *free_rank,
                torsion: torsion.clone(),
            },
        };
        serde_json::to_value(doc).expect("group documents always serialize")
    }

    pub fn from_json(v: &Value) -> Result<Self, ActionError> {
        let doc: GroupDoc = serde_json::from_value(v.clone()).map_err(|e| ActionError::InvalidGroup(e.to_string()))?;
        match doc {
            GroupDoc::Finite { elements, mul } => {
                Ok(AnnotationGroup::Finite(FiniteGroup::from_triples(elements, &mul)?))
            }
            GroupDoc::Abelian { free_rank, torsion } => Self::abelian(free_rank, torsion),
        }
    }
}
