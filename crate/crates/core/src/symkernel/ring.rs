use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Which block a variable belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    Base,
    /// Cone coordinates; the index distinguishes several cone blocks in one ring.
    Cone(u16),
    /// Auxiliary variables (Rees parameter, slack variables for intersections).
    Aux,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Var {
    pub name: String,
    pub block: Block,
    /// Weight in the base (homogenizing) grading.
    pub base_weight: u32,
    /// Weight in the cone grading.
    pub cone_weight: u32,
}

/// Polynomial ring over the rationals with named, graded variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<Var>,
}

pub type Ring = Arc<PolyRing>;

impl PolyRing {
    pub fn new(vars: Vec<Var>) -> Result<Ring> {
        let mut seen = HashSet::new();
        for v in &vars {
            if !seen.insert(v.name.as_str()) {
                return Err(Error::invalid(format!("duplicate variable `{}`", v.name)));
            }
        }
        Ok(Arc::new(PolyRing { vars }))
    }

    /// A ring of base variables of weight one.
    pub fn base<S: AsRef<str>>(names: &[S]) -> Result<Ring> {
        Self::new(
            names
                .iter()
                .map(|n| Var {
                    name: n.as_ref().to_string(),
                    block: Block::Base,
                    base_weight: 1,
                    cone_weight: 0,
                })
                .collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.vars.iter().map(|v| v.name.as_str())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn base_weights(&self) -> Vec<u32> {
        self.vars.iter().map(|v| v.base_weight).collect()
    }

    pub fn cone_weights(&self) -> Vec<u32> {
        self.vars.iter().map(|v| v.cone_weight).collect()
    }

    pub fn block_mask(&self, pred: impl Fn(&Var) -> bool) -> Vec<bool> {
        self.vars.iter().map(pred).collect()
    }

    /// This ring followed by `extra` variables.
    pub fn extended(&self, extra: Vec<Var>) -> Result<Ring> {
        let mut vars = self.vars.clone();
        vars.extend(extra);
        Self::new(vars)
    }

    /// A name not yet used in the ring, derived from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.index_of(stem).is_none() {
            return stem.to_string();
        }
        (0..)
            .map(|i| format!("{stem}_{i}"))
            .find(|n| self.index_of(n).is_none())
            .unwrap()
    }
}

impl Var {
    pub fn aux(name: impl Into<String>) -> Var {
        Var {
            name: name.into(),
            block: Block::Aux,
            base_weight: 0,
            cone_weight: 0,
        }
    }

    pub fn cone(name: impl Into<String>, block: u16, twist: u32) -> Var {
        Var {
            name: name.into(),
            block: Block::Cone(block),
            base_weight: twist,
            cone_weight: 1,
        }
    }
}
