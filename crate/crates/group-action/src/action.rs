use std::collections::BTreeMap;

use cat_core::{Category, Partition};
use serde::{Deserialize, Serialize};

use crate::error::ActionError;
use crate::group::FiniteGroup;

/// A finite group acting on a category through explicit tables:
/// `vertex[g][v]` is `v^g` and `arrow[g][a]` is `a^g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryAction {
    category: Category,
    group: FiniteGroup,
    vertex: Vec<Vec<usize>>,
    arrow: Vec<Vec<usize>>,
}

/// One generating automorphism given by name maps; unlisted items are fixed.
#[derive(Debug, Clone, Default)]
pub struct Generator {
    pub name: String,
    pub vertices: Vec<(String, String)>,
    pub arrows: Vec<(String, String)>,
}

impl CategoryAction {
    /// Wraps explicit tables. Only shapes are checked here; the automorphism
    /// and action laws are reported by [`crate::check_action`].
    pub fn from_tables(
        category: Category,
        group: FiniteGroup,
        vertex: Vec<Vec<usize>>,
        arrow: Vec<Vec<usize>>,
    ) -> Result<Self, ActionError> {
        let (nv, na) = (category.num_vertices(), category.num_arrows());
        let shape_ok = vertex.len() == group.order()
            && arrow.len() == group.order()
            && vertex.iter().all(|t| t.len() == nv && t.iter().all(|&v| v < nv))
            && arrow.iter().all(|t| t.len() == na && t.iter().all(|&a| a < na));
        if !shape_ok {
            return Err(ActionError::InvalidAction(
                "table shapes do not match group and category".into(),
            ));
        }
        Ok(Self {
            category,
            group,
            vertex,
            arrow,
        })
    }

    pub fn trivial(category: Category) -> Self {
        let vertex = vec![category.vertices().collect()];
        let arrow = vec![category.arrow_ids().collect()];
        Self {
            category,
            group: FiniteGroup::trivial(),
            vertex,
            arrow,
        }
    }

    /// Group generated by index-level automorphisms `(name, vertex perm,
    /// arrow perm)`; see [`FiniteGroup::generated_by`] for element names.
    pub fn generated(category: Category, generators: &[(String, Vec<usize>, Vec<usize>)]) -> Result<Self, ActionError> {
        let nv = category.num_vertices();
        let na = category.num_arrows();
        let mut gens = Vec::new();
        for (name, vp, ap) in generators {
            if vp.len() != nv || ap.len() != na {
                return Err(ActionError::InvalidAction(format!("generator `{name}` has wrong size")));
            }
            let mut p = vp.clone();
            p.extend(ap.iter().map(|&a| a + nv));
            gens.push((name.clone(), p));
        }
        let (group, perms) = FiniteGroup::generated_by(nv + na, &gens)?;
        let vertex = perms.iter().map(|p| p[..nv].to_vec()).collect();
        let arrow = perms
            .iter()
            .map(|p| p[nv..].iter().map(|&a| a - nv).collect())
            .collect();
        Self::from_tables(category, group, vertex, arrow)
    }

    /// As [`CategoryAction::generated`] with name-level generators.
    pub fn generated_by_names(category: Category, generators: &[Generator]) -> Result<Self, ActionError> {
        let mut idx = Vec::new();
        for g in generators {
            let mut vp: Vec<usize> = category.vertices().collect();
            let mut ap: Vec<usize> = category.arrow_ids().collect();
            for (x, y) in &g.vertices {
                let (Some(i), Some(j)) = (category.vertex_id(x), category.vertex_id(y)) else {
                    return Err(ActionError::InvalidAction(format!("unknown vertex in `{}`", g.name)));
                };
                vp[i] = j;
            }
            for (x, y) in &g.arrows {
                let (Some(i), Some(j)) = (category.arrow_id(x), category.arrow_id(y)) else {
                    return Err(ActionError::InvalidAction(format!("unknown arrow in `{}`", g.name)));
                };
                ap[i] = j;
            }
            idx.push((g.name.clone(), vp, ap));
        }
        Self::generated(category, &idx)
    }

    pub fn category(&self) -> &Category {
        &self.category
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn act_vertex(&self, v: usize, g: usize) -> usize {
        self.vertex[g][v]
    }

    pub fn act_arrow(&self, a: usize, g: usize) -> usize {
        self.arrow[g][a]
    }

    pub fn vertex_table(&self) -> &[Vec<usize>] {
        &self.vertex
    }

    pub fn arrow_table(&self) -> &[Vec<usize>] {
        &self.arrow
    }

    /// Vertex and arrow orbit partitions.
    pub fn orbits(&self) -> (Partition, Partition) {
        let vrep: Vec<usize> = self
            .category
            .vertices()
            .map(|v| self.group.elements().map(|g| self.vertex[g][v]).min().unwrap())
            .collect();
        let arep: Vec<usize> = self
            .category
            .arrow_ids()
            .map(|a| self.group.elements().map(|g| self.arrow[g][a]).min().unwrap())
            .collect();
        (Partition::from_labels(&vrep), Partition::from_labels(&arep))
    }

    /// Some `g` with `x^g = y`, the least index if several.
    pub fn element_moving_vertex(&self, x: usize, y: usize) -> Option<usize> {
        self.group.elements().find(|&g| self.vertex[g][x] == y)
    }

    pub fn element_moving_arrow(&self, a: usize, b: usize) -> Option<usize> {
        self.group.elements().find(|&g| self.arrow[g][a] == b)
    }

    /// Restricts the acting group to the subgroup generated by `elements`.
    pub fn restrict(&self, elements: &[usize]) -> Result<Self, ActionError> {
        let gens: Vec<(String, Vec<usize>, Vec<usize>)> = elements
            .iter()
            .map(|&g| {
                (
                    self.group.name(g).to_string(),
                    self.vertex[g].clone(),
                    self.arrow[g].clone(),
                )
            })
            .collect();
        Self::generated(self.category.clone(), &gens)
    }

    pub fn to_doc(&self) -> ActionDoc {
        let c = &self.category;
        let g = &self.group;
        let table =
            |f: &dyn Fn(usize, usize) -> (String, String), n: usize| -> BTreeMap<String, BTreeMap<String, String>> {
                g.elements()
                    .map(|e| (g.name(e).to_string(), (0..n).map(|i| f(e, i)).collect()))
                    .collect()
            };
        ActionDoc {
            group: GroupTableDoc {
                elements: g.names().to_vec(),
                mul: g.triples(),
            },
            act_vertex: table(
                &|e, v| {
                    (
                        c.vertex_name(v).to_string(),
                        c.vertex_name(self.vertex[e][v]).to_string(),
                    )
                },
                c.num_vertices(),
            ),
            act_arrow: table(
                &|e, a| (c.arrow_name(a).to_string(), c.arrow_name(self.arrow[e][a]).to_string()),
                c.num_arrows(),
            ),
        }
    }

    pub fn from_doc(category: Category, doc: &ActionDoc) -> Result<Self, ActionError> {
        let group = FiniteGroup::from_triples(doc.group.elements.clone(), &doc.group.mul)?;
        let mut vertex = Vec::new();
        let mut arrow = Vec::new();
        for g in group.names() {
            let vmap = doc.act_vertex.get(g);
            let amap = doc.act_arrow.get(g);
            let mut vt = Vec::new();
            for v in category.vertices() {
                let name = category.vertex_name(v);
                let image = vmap.and_then(|m| m.get(name)).map(String::as_str).unwrap_or(name);
                vt.push(
                    category
                        .vertex_id(image)
                        .ok_or_else(|| ActionError::InvalidAction(format!("unknown vertex `{image}`")))?,
                );
            }
            let mut at = Vec::new();
            for a in category.arrow_ids() {
                let name = category.arrow_name(a);
                let image = amap.and_then(|m| m.get(name)).map(String::as_str).unwrap_or(name);
                at.push(
                    category
                        .arrow_id(image)
                        .ok_or_else(|| ActionError::InvalidAction(format!("unknown arrow `{image}`")))?,
                );
            }
            vertex.push(vt);
            arrow.push(at);
        }
        Self::from_tables(category, group, vertex, arrow)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("action documents always serialize")
    }

    pub fn from_json(category: Category, text: &str) -> Result<Self, ActionError> {
        let doc: ActionDoc = serde_json::from_str(text).map_err(|e| ActionError::InvalidAction(e.to_string()))?;
        Self::from_doc(category, &doc)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTableDoc {
    pub elements: Vec<String>,
    pub mul: Vec<[String; 3]>,
}

/// Interchange form of an action; the category travels separately.
/// Missing entries in `act_vertex` / `act_arrow` mean "fixed".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDoc {
    pub group: GroupTableDoc,
    pub act_vertex: BTreeMap<String, BTreeMap<String, String>>,
    pub act_arrow: BTreeMap<String, BTreeMap<String, String>>,
}
