use std::fmt;

use crate::category::Category;

/// One broken law together with the identifiers that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<String>,
}

impl Violation {
    pub fn new(law: impl Into<String>, witness: Vec<String>) -> Self {
        Self {
            law: law.into(),
            witness,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.law, self.witness.join(" "))
    }
}

/// List of violated laws; empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: impl Into<String>, witness: Vec<String>) {
        self.violations.push(Violation::new(law, witness));
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    /// True iff some violation is tagged with `law`.
    pub fn mentions(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Outcome of a predicate that carries a counterexample when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// Checks identity, closure, endpoint and associativity laws.
///
/// Law tags: `identity`, `identity-left`, `identity-right`,
/// `non-composable-entry`, `endpoint`, `closure`, `associativity`.
pub fn validate_category(c: &Category) -> ValidationReport {
    let mut r = ValidationReport::default();
    let name = |a: usize| c.arrow_name(a).to_string();

    for v in c.vertices() {
        let id = c.identity(v);
        if c.src(id) != v || c.dst(id) != v {
            r.push("identity", vec![c.vertex_name(v).into(), name(id)]);
            continue;
        }
        for &a in c.out_arrows(v) {
            if c.compose(id, a) != Some(a) {
                r.push("identity-left", vec![name(id), name(a)]);
            }
        }
        for &a in c.in_arrows(v) {
            if c.compose(a, id) != Some(a) {
                r.push("identity-right", vec![name(a), name(id)]);
            }
        }
    }

    for (a, b, ab) in c.compositions() {
        if c.dst(a) != c.src(b) {
            r.push("non-composable-entry", vec![name(a), name(b), name(ab)]);
            continue;
        }
        if c.src(ab) != c.src(a) || c.dst(ab) != c.dst(b) {
            r.push("endpoint", vec![name(a), name(b), name(ab)]);
        }
    }

    if !c.is_partial() {
        for a in c.arrow_ids() {
            for &b in c.out_arrows(c.dst(a)) {
                if c.compose(a, b).is_none() {
                    r.push("closure", vec![name(a), name(b)]);
                }
            }
        }
    }

    for (a, b, ab) in c.compositions() {
        if c.dst(a) != c.src(b) || c.dst(ab) != c.dst(b) {
            continue;
        }
        for &x in c.out_arrows(c.dst(b)) {
            let (Some(left), Some(bx)) = (c.compose(ab, x), c.compose(b, x)) else {
                continue;
            };
            if let Some(right) = c.compose(a, bx) {
                if left != right {
                    r.push(
                        "associativity",
                        vec![name(a), name(b), name(x), name(left), name(right)],
                    );
                }
            }
        }
    }
    r
}
