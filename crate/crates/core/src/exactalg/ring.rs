use std::fmt;
use std::sync::Arc;

use super::{AlgError, Result};

/// `root^2 = square`. The square may or may not be a declared variable; when
/// it is, canonicalization folds its exponent into the root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SqrtRelation {
    pub root: usize,
    pub square: String,
    pub square_slot: Option<usize>,
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingInner {
    vars: Vec<String>,
    sqrt: Option<SqrtRelation>,
}

/// Variable context shared by all expressions of one ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring(Arc<RingInner>);

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<Ring> {
        if vars.is_empty() {
            return Err(AlgError::EmptyRing);
        }
        let mut names: Vec<String> = Vec::with_capacity(vars.len());
        for v in vars {
            let v = v.as_ref();
            if !valid_name(v) {
                return Err(AlgError::InvalidVariableName(v.to_string()));
            }
            if names.iter().any(|n| n == v) {
                return Err(AlgError::DuplicateVariable(v.to_string()));
            }
            names.push(v.to_string());
        }
        Ok(Ring(Arc::new(RingInner { vars: names, sqrt: None })))
    }

    /// Declares `root^2 = square`. `root` must be a variable of the ring.
    pub fn with_sqrt(self, root: &str, square: &str) -> Result<Ring> {
        let root_idx = self.index_of(root)?;
        if !valid_name(square) {
            return Err(AlgError::InvalidVariableName(square.to_string()));
        }
        if square == root {
            return Err(AlgError::DuplicateVariable(square.to_string()));
        }
        let square_slot = self.0.vars.iter().position(|v| v == square);
        Ok(Ring(Arc::new(RingInner {
            vars: self.0.vars.clone(),
            sqrt: Some(SqrtRelation {
                root: root_idx,
                square: square.to_string(),
                square_slot,
            }),
        })))
    }

    /// The ring `Q[v^+-1, X^+-1]` with `v^2 = q` used for Plancherel and Hecke
    /// coefficients.
    pub fn standard(extra: &[&str]) -> Ring {
        let mut vars = vec!["v"];
        vars.extend_from_slice(extra);
        Ring::new(&vars)
            .and_then(|r| r.with_sqrt("v", "q"))
            .expect("standard ring variables are valid")
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.0
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgError::UnknownVariable(name.to_string()))
    }

    pub fn sqrt_relation(&self) -> Option<&SqrtRelation> {
        self.0.sqrt.as_ref()
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(AlgError::RingMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.0.vars.join(", "))?;
        if let Some(rel) = &self.0.sqrt {
            write!(f, " with {}^2 = {}", self.0.vars[rel.root], rel.square)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_slots() {
        let r = Ring::new(&["v", "X"]).unwrap();
        assert_eq!(r.nvars(), 2);
        assert_eq!(r.index_of("X").unwrap(), 1);
    }

    #[test]
    fn duplicate_rejected() {
        assert_eq!(
            Ring::new(&["v", "v"]),
            Err(AlgError::DuplicateVariable("v".into()))
        );
    }

    #[test]
    fn empty_rejected() {
        let none: [&str; 0] = [];
        assert_eq!(Ring::new(&none), Err(AlgError::EmptyRing));
    }

    #[test]
    fn bad_names() {
        assert!(Ring::new(&["1x"]).is_err());
        assert!(Ring::new(&["a b"]).is_err());
        assert!(Ring::new(&["v"]).unwrap().with_sqrt("w", "q").is_err());
    }

    #[test]
    fn sqrt_slot_recorded() {
        let r = Ring::new(&["v", "q", "X"]).unwrap().with_sqrt("v", "q").unwrap();
        let rel = r.sqrt_relation().unwrap();
        assert_eq!((rel.root, rel.square_slot), (0, Some(1)));
    }
}
