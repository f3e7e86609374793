//! Ring descriptors.
//!
//! A descriptor fixes parameter names, variable names and the term order.
//! The coefficient mode (plain rationals vs rational functions in the
//! parameters) is the type parameter of `Poly`; a descriptor with no
//! parameters is what specialized objects live over. Descriptors are
//! shared behind `Arc`, and equality is structural, so objects built
//! independently over equal descriptors interoperate.

use std::fmt;
use std::sync::Arc;

use super::monomial::MonomialOrder;
use crate::error::{Error, Result};

pub type Ring = Arc<RingData>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingData {
    params: Vec<String>,
    vars: Vec<String>,
    order: MonomialOrder,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingData {
    pub fn new(params: Vec<String>, vars: Vec<String>, order: MonomialOrder) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::input("a ring needs at least one variable"));
        }
        let mut seen = std::collections::BTreeSet::new();
        for name in params.iter().chain(&vars) {
            if !valid_name(name) {
                return Err(Error::input(format!("invalid name `{name}`")));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::input(format!("duplicate name `{name}`")));
            }
        }
        if let MonomialOrder::Block { lex_prefix } = order {
            if lex_prefix == 0 || lex_prefix >= vars.len() {
                return Err(Error::input(format!(
                    "block order prefix {lex_prefix} out of range for {} variables",
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(RingData {
            params,
            vars,
            order,
        }))
    }

    /// Plain Q[x...] over the same variables, used for tests and for the
    /// substituted side of every verification.
    pub fn rational(vars: &[&str], order: MonomialOrder) -> Ring {
        RingData::new(
            Vec::new(),
            vars.iter().map(|s| s.to_string()).collect(),
            order,
        )
        .expect("valid test ring")
    }

    pub fn parametric(params: &[&str], vars: &[&str], order: MonomialOrder) -> Ring {
        RingData::new(
            params.iter().map(|s| s.to_string()).collect(),
            vars.iter().map(|s| s.to_string()).collect(),
            order,
        )
        .expect("valid test ring")
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nparams(&self) -> usize {
        self.params.len()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|p| p == name)
    }

    /// The ring the image of a substitution u -> alpha lives in.
    pub fn specialized(&self) -> Ring {
        Arc::new(RingData {
            params: Vec::new(),
            vars: self.vars.clone(),
            order: self.order,
        })
    }

    /// Same ring with one fresh variable in front and a block order that
    /// eliminates it. Used by the intersection trick.
    pub fn with_elim_prefix(&self, name: &str) -> Result<Ring> {
        let mut vars = Vec::with_capacity(self.vars.len() + 1);
        vars.push(name.to_string());
        vars.extend(self.vars.iter().cloned());
        RingData::new(self.params.clone(), vars, MonomialOrder::Block { lex_prefix: 1 })
    }

    /// Drop the first `k` variables, restoring the given order.
    pub fn without_prefix(&self, k: usize, order: MonomialOrder) -> Result<Ring> {
        RingData::new(self.params.clone(), self.vars[k..].to_vec(), order)
    }

    pub fn describe(&self) -> String {
        format!(
            "params: {}; vars: {}; order: {}",
            if self.params.is_empty() {
                "-".to_string()
            } else {
                self.params.join(",")
            },
            self.vars.join(","),
            self.order.describe()
        )
    }
}

impl fmt::Display for RingData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// Structural equality shortcut used before arithmetic mixes operands.
pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn ensure_same_ring(a: &Ring, b: &Ring) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}
