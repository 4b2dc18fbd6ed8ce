use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::category::{Category, CategoryBuilder};
use crate::error::CatError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub id: String,
    pub src: String,
    pub dst: String,
}

/// Interchange form of a [`Category`].
///
/// `identities` maps each vertex to its identity arrow, which must also be
/// listed in `arrows`. `compose` lists `[a, b, a*b]` triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryDoc {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    pub identities: BTreeMap<String, String>,
    pub compose: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub partial: bool,
}

impl Category {
    /// Canonical document: vertices and arrows in index order, compositions
    /// sorted by index pair.
    pub fn to_doc(&self) -> CategoryDoc {
        let vname = |v: usize| self.vertex_name(v).to_string();
        let aname = |a: usize| self.arrow_name(a).to_string();
        CategoryDoc {
            vertices: self.vertex_names().to_vec(),
            arrows: self
                .arrow_ids()
                .map(|a| ArrowDoc {
                    id: aname(a),
                    src: vname(self.src(a)),
                    dst: vname(self.dst(a)),
                })
                .collect(),
            identities: self.vertices().map(|v| (vname(v), aname(self.identity(v)))).collect(),
            compose: self
                .compositions()
                .into_iter()
                .map(|(a, b, c)| [aname(a), aname(b), aname(c)])
                .collect(),
            partial: self.is_partial(),
        }
    }

    /// Rebuilds a category, keeping arrow order. Identity laws that are not
    /// listed are filled in.
    pub fn from_doc(doc: &CategoryDoc) -> Result<Category, CatError> {
        let mut b = CategoryBuilder::new();
        b.set_partial(doc.partial);
        let mut vindex = BTreeMap::new();
        let mut identity_owner: BTreeMap<&str, &str> = BTreeMap::new();
        for (v, id) in &doc.identities {
            identity_owner.insert(id.as_str(), v.as_str());
        }
        for v in &doc.vertices {
            if !doc.identities.contains_key(v) {
                return Err(CatError::Malformed(format!("vertex `{v}` has no identity")));
            }
        }
        // Arrows are created in document order and a vertex (with its
        // identity) the first time it is needed, which reproduces the index
        // order of canonical documents.
        let mut aindex: BTreeMap<String, usize> = BTreeMap::new();
        let mut ensure_vertex =
            |b: &mut CategoryBuilder, aindex: &mut BTreeMap<String, usize>, v: &str| -> Result<usize, CatError> {
                if let Some(&i) = vindex.get(v) {
                    return Ok(i);
                }
                let id = doc
                    .identities
                    .get(v)
                    .ok_or_else(|| CatError::UnknownVertex(v.to_string()))?;
                let i = b.vertex_with_identity(v, id);
                aindex.insert(id.clone(), b.identity_of(i));
                vindex.insert(v.to_string(), i);
                Ok(i)
            };
        for a in &doc.arrows {
            if let Some(&owner) = identity_owner.get(a.id.as_str()) {
                if a.src != owner || a.dst != owner {
                    return Err(CatError::Malformed(format!(
                        "identity `{}` is not a loop at `{owner}`",
                        a.id
                    )));
                }
                ensure_vertex(&mut b, &mut aindex, owner)?;
                continue;
            }
            let s = ensure_vertex(&mut b, &mut aindex, &a.src)?;
            let t = ensure_vertex(&mut b, &mut aindex, &a.dst)?;
            if aindex.contains_key(&a.id) {
                return Err(CatError::Duplicate(a.id.clone()));
            }
            let i = b.arrow(&a.id, s, t);
            aindex.insert(a.id.clone(), i);
        }
        for v in &doc.vertices {
            ensure_vertex(&mut b, &mut aindex, v)?;
        }
        for [x, y, z] in &doc.compose {
            let get = |n: &String| aindex.get(n).copied().ok_or_else(|| CatError::UnknownArrow(n.clone()));
            b.set_compose(get(x)?, get(y)?, get(z)?);
        }
        b.build()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("category documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Category, CatError> {
        let doc: CategoryDoc = serde_json::from_str(text).map_err(|e| CatError::Malformed(e.to_string()))?;
        Category::from_doc(&doc)
    }
}
