use std::collections::BTreeMap;

use cat_core::{Category, CategoryDoc, ValidationReport};
use group_action::{AnnotationGroup, GroupElem};
use serde_json::{json, Value};

use crate::error::FoldError;

/// Contravariant labelling of arrows by group elements, indexed by arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annotation {
    pub group: AnnotationGroup,
    pub labels: Vec<GroupElem>,
}

impl Annotation {
    pub fn neutral(group: AnnotationGroup, c: &Category) -> Self {
        let labels = vec![group.neutral(); c.num_arrows()];
        Self { group, labels }
    }

    pub fn label(&self, a: usize) -> &GroupElem {
        &self.labels[a]
    }

    /// `A(a * b) = A(b) A(a)` on every listed composite, `A(id) = 1`.
    ///
    /// Law tags: `annotation-size`, `annotation-element`,
    /// `annotation-identity`, `annotation-contravariance`.
    pub fn check(&self, c: &Category) -> ValidationReport {
        let mut r = ValidationReport::default();
        if self.labels.len() != c.num_arrows() {
            r.push("annotation-size", vec![self.labels.len().to_string()]);
            return r;
        }
        let n = |a: usize| c.arrow_name(a).to_string();
        for a in c.arrow_ids() {
            if !self.group.contains(&self.labels[a]) {
                r.push("annotation-element", vec![n(a)]);
            }
        }
        for v in c.vertices() {
            if !self.group.is_neutral(&self.labels[c.identity(v)]) {
                r.push("annotation-identity", vec![n(c.identity(v))]);
            }
        }
        for (a, b, ab) in c.compositions() {
            let expect = self.group.mul(&self.labels[b], &self.labels[a]);
            if self.labels[ab] != expect {
                r.push("annotation-contravariance", vec![n(a), n(b), n(ab)]);
            }
        }
        r
    }
}

/// A category with an annotation into a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub category: Category,
    pub annotation: Annotation,
    faithful: bool,
}

impl Representation {
    pub fn new(category: Category, annotation: Annotation) -> Self {
        let faithful = is_faithful(&category, &annotation);
        Self {
            category,
            annotation,
            faithful,
        }
    }

    pub fn group(&self) -> &AnnotationGroup {
        &self.annotation.group
    }

    pub fn label(&self, a: usize) -> &GroupElem {
        &self.annotation.labels[a]
    }

    /// Annotation injective on every hom-set (cached at construction).
    pub fn is_faithful(&self) -> bool {
        self.faithful
    }

    pub fn check(&self) -> ValidationReport {
        self.annotation.check(&self.category)
    }

    pub fn to_json_value(&self) -> Value {
        let c = &self.category;
        let labels: BTreeMap<String, Value> = c
            .arrow_ids()
            .map(|a| (c.arrow_name(a).to_string(), self.group().elem_to_json(self.label(a))))
            .collect();
        json!({
            "category": serde_json::to_value(c.to_doc()).expect("category documents serialize"),
            "group": self.group().to_json(),
            "annotation": labels,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("values serialize")
    }

    pub fn from_json_value(v: &Value) -> Result<Self, FoldError> {
        let doc: CategoryDoc = serde_json::from_value(v["category"].clone())
            .map_err(|e| FoldError::Malformed(format!("category: {e}")))?;
        let category = Category::from_doc(&doc)?;
        let group = AnnotationGroup::from_json(&v["group"])?;
        let map = v["annotation"]
            .as_object()
            .ok_or_else(|| FoldError::Malformed("annotation must be an object".into()))?;
        let mut labels = vec![group.neutral(); category.num_arrows()];
        for (name, val) in map {
            let a = category
                .arrow_id(name)
                .ok_or_else(|| FoldError::Malformed(format!("unknown arrow `{name}`")))?;
            labels[a] = group.elem_from_json(val)?;
        }
        Ok(Self::new(category, Annotation { group, labels }))
    }

    pub fn from_json(text: &str) -> Result<Self, FoldError> {
        let v: Value = serde_json::from_str(text).map_err(|e| FoldError::Malformed(e.to_string()))?;
        Self::from_json_value(&v)
    }
}

/// Injective on each hom-set.
pub fn is_faithful(c: &Category, ann: &Annotation) -> bool {
    c.vertices().all(|x| {
        c.vertices().all(|y| {
            let hom = c.hom(x, y);
            let mut labels: Vec<&GroupElem> = hom.iter().map(|&a| &ann.labels[a]).collect();
            labels.sort();
            labels.dedup();
            labels.len() == hom.len()
        })
    })
}
