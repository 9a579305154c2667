use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Shared handle to a variable context.
pub type Ctx = Arc<VarContext>;

/// An ordered list of distinct variable names. The position of a name is its
/// coordinate index in every exponent vector built against this context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ctx> {
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref().trim();
            if !valid_name(n) {
                return Err(Error::InvalidContext(format!("`{n}` is not a valid variable name")));
            }
            if out.iter().any(|m| m == n) {
                return Err(Error::InvalidContext(format!("duplicate variable `{n}`")));
            }
            out.push(n.to_string());
        }
        Ok(Arc::new(VarContext { names: out }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// Context with `name` appended as the last variable.
    pub fn with_appended(&self, name: &str) -> Result<Ctx> {
        if self.contains(name) {
            return Err(Error::VariableCollision(name.to_string()));
        }
        let mut names = self.names.clone();
        names.push(name.to_string());
        VarContext::new(&names)
    }

    /// Context with `name` inserted at the front.
    pub fn with_prepended(&self, name: &str) -> Result<Ctx> {
        if self.contains(name) {
            return Err(Error::VariableCollision(name.to_string()));
        }
        let mut names = vec![name.to_string()];
        names.extend(self.names.iter().cloned());
        VarContext::new(&names)
    }

    /// A name starting with `stem` that is not yet used.
    pub fn fresh_name(&self, stem: &str) -> String {
        if !self.contains(stem) {
            return stem.to_string();
        }
        (1..)
            .map(|i| format!("{stem}{i}"))
            .find(|n| !self.contains(n))
            .unwrap()
    }
}

impl fmt::Display for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}
