use std::collections::{HashMap, VecDeque};

use crate::error::ActionError;

/// Finite group given by its multiplication table.
///
/// `mul(g, h)` is "first g, then h", matching the left-associative action
/// convention `(x^g)^h = x^(gh)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    neutral: usize,
}

impl FiniteGroup {
    /// Validates the group axioms exhaustively.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, ActionError> {
        let n = names.len();
        if n == 0 {
            return Err(ActionError::InvalidGroup("empty group".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&k| k >= n)) {
            return Err(ActionError::InvalidGroup("table is not n x n over the elements".into()));
        }
        let neutral = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| ActionError::InvalidGroup("no neutral element".into()))?;
        let mut inverse = vec![0; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| table[g][h] == neutral && table[h][g] == neutral)
                .ok_or_else(|| ActionError::InvalidGroup(format!("`{}` has no inverse", names[g])))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(ActionError::InvalidGroup(format!(
                            "associativity fails on {} {} {}",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        if !names.iter().all(|x| seen.insert(x)) {
            return Err(ActionError::InvalidGroup("duplicate element name".into()));
        }
        Ok(Self {
            names,
            table,
            inverse,
            neutral,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// Z_n with elements named `0..n`.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|k| k.to_string()).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table(names, table).expect("cyclic groups are groups")
    }

    /// Closure of permutation generators acting on `0..degree` by BFS over
    /// words. Elements are named by their shortest word (generator names
    /// joined with `.`, first applied first); the neutral element is `e`.
    /// Returns the group and the permutation of each element.
    pub fn generated_by(
        degree: usize,
        generators: &[(String, Vec<usize>)],
    ) -> Result<(Self, Vec<Vec<usize>>), ActionError> {
        for (name, p) in generators {
            let mut seen = vec![false; degree];
            if p.len() != degree || p.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(ActionError::InvalidGroup(format!(
                    "generator `{name}` is not a permutation"
                )));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut perms = vec![id.clone()];
        let mut names = vec!["e".to_string()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (gname, g) in generators {
                // apply perms[i] first, then g
                let next: Vec<usize> = perms[i].iter().map(|&x| g[x]).collect();
                if !index.contains_key(&next) {
                    let name = if i == 0 {
                        gname.clone()
                    } else {
                        format!("{}.{gname}", names[i])
                    };
                    index.insert(next.clone(), perms.len());
                    names.push(name);
                    queue.push_back(perms.len());
                    perms.push(next);
                }
            }
        }
        let n = perms.len();
        let mut table = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let p: Vec<usize> = perms[i].iter().map(|&x| perms[j][x]).collect();
                table[i][j] = index[&p];
            }
        }
        Ok((Self::from_table(names, table)?, perms))
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.names.len()
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn neutral(&self) -> usize {
        self.neutral
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|g| self.elements().all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// Multiplication triples `[g, h, gh]` by name, in index order.
    pub fn triples(&self) -> Vec<[String; 3]> {
        let mut out = Vec::with_capacity(self.order() * self.order());
        for g in self.elements() {
            for h in self.elements() {
                out.push([
                    self.names[g].clone(),
                    self.names[h].clone(),
                    self.names[self.mul(g, h)].clone(),
                ]);
            }
        }
        out
    }

    pub fn from_triples(names: Vec<String>, triples: &[[String; 3]]) -> Result<Self, ActionError> {
        let n = names.len();
        let idx: HashMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut table = vec![vec![usize::MAX; n]; n];
        for [g, h, k] in triples {
            let get = |s: &String| {
                idx.get(s.as_str())
                    .copied()
                    .ok_or_else(|| ActionError::InvalidGroup(format!("unknown element `{s}`")))
            };
            table[get(g)?][get(h)?] = get(k)?;
        }
        if table.iter().flatten().any(|&k| k == usize::MAX) {
            return Err(ActionError::InvalidGroup("multiplication table incomplete".into()));
        }
        Self::from_table(names, table)
    }
}
