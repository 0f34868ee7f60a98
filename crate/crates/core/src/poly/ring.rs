use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// Maximum number of user-declared variables.
pub const MAX_VARS: usize = 3;

/// Internal rings may carry one extra elimination variable.
pub(crate) const MAX_INTERNAL_VARS: usize = MAX_VARS + 1;

/// An ordered list of variable names. Variable `0` is the most significant
/// one in the default lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, PolyError> {
        if names.len() > MAX_VARS {
            return Err(PolyError::InvalidVariables(format!(
                "at most {MAX_VARS} variables are supported, got {}",
                names.len()
            )));
        }
        Self::build(names)
    }

    /// Parses a comma separated list such as `z1,z2,z3`.
    pub fn parse(list: &str) -> Result<Self, PolyError> {
        let names: Vec<&str> = list.split(',').map(str::trim).collect();
        Self::new(&names)
    }

    fn build<S: AsRef<str>>(names: &[S]) -> Result<Self, PolyError> {
        if names.is_empty() {
            return Err(PolyError::InvalidVariables("empty variable list".into()));
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            let mut chars = name.chars();
            let valid = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(PolyError::InvalidVariables(format!("`{name}` is not an identifier")));
            }
            if out.iter().any(|n| n == name) {
                return Err(PolyError::InvalidVariables(format!("duplicate variable `{name}`")));
            }
            out.push(name.to_string());
        }
        Ok(Self { names: out.into() })
    }

    /// `z1, …, zn`.
    pub fn standard(n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("z{i}")).collect();
        Self::new(&names).expect("standard ring")
    }

    /// The ring with a fresh variable prepended, so that it is the greatest
    /// variable in lex order. Used for elimination.
    pub(crate) fn with_leading_variable(&self) -> Self {
        let mut fresh = String::from("t");
        while self.names.contains(&fresh) {
            fresh.insert(0, '_');
        }
        let mut names = Vec::with_capacity(self.nvars() + 1);
        names.push(fresh);
        names.extend(self.names.iter().cloned());
        assert!(names.len() <= MAX_INTERNAL_VARS);
        Self { names: names.into() }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<(), PolyError> {
        if self == other {
            Ok(())
        } else {
            Err(PolyError::RingMismatch { left: self.to_string(), right: other.to_string() })
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(","))
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_lists() {
        assert!(Ring::parse("z1,z2,z3,z4").is_err());
        assert!(Ring::parse("z1,z1").is_err());
        assert!(Ring::parse("1z").is_err());
        assert!(Ring::parse("").is_err());
        assert_eq!(Ring::parse("x, y").unwrap().names(), ["x", "y"]);
    }

    #[test]
    fn elimination_variable_is_fresh() {
        let r = Ring::parse("t,z1").unwrap();
        let e = r.with_leading_variable();
        assert_eq!(e.names(), ["_t", "t", "z1"]);
    }
}
