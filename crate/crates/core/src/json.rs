//! JSON documents exchanged by the command-line tool.
//!
//! ```json
//! {"vars": ["x", "y", "z"], "components": ["x + y", "y", "z + x^5"]}
//! ```

use serde::{Deserialize, Serialize};

use crate::automorphism::{Multidegree, PolyMap};
use crate::classifier::{Rule, Status, Verdict, Witness};
use crate::error::{dimension, invalid, Result};
use crate::poly::{default_var_names, parse_with, render_with, ExtendedDegree};
use crate::reduction::Reduction;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMapDoc {
    pub vars: Vec<String>,
    pub components: Vec<String>,
}

impl PolyMapDoc {
    pub fn from_map(map: &PolyMap) -> Self {
        let vars = default_var_names(map.var_count());
        let components = map.components().iter().map(|c| render_with(c, &vars)).collect();
        PolyMapDoc { vars, components }
    }

    pub fn to_map(&self) -> Result<PolyMap> {
        if self.vars.len() != self.components.len() {
            return Err(dimension(format!(
                "{} variables but {} components",
                self.vars.len(),
                self.components.len()
            )));
        }
        for (i, v) in self.vars.iter().enumerate() {
            if self.vars[..i].contains(v) {
                return Err(invalid(format!("variable `{v}` listed twice")));
            }
        }
        let components = self
            .components
            .iter()
            .map(|c| parse_with(c, &self.vars))
            .collect::<Result<_>>()?;
        PolyMap::new(components)
    }
}

/// One elementary factor `coordinate ↦ coordinate + shift`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub coordinate: String,
    pub shift: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub status: Status,
    pub rule: Rule,
    pub citation: String,
    pub witness: Option<PolyMapDoc>,
    /// Elementary factors of the witness, outermost first.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factorization: Option<Vec<FactorDoc>>,
    pub sorted_input: [u64; 3],
}

fn factor_docs(w: &Witness) -> Vec<FactorDoc> {
    let vars = default_var_names(w.map.var_count());
    w.factors
        .iter()
        .map(|f| FactorDoc {
            coordinate: vars[f.coordinate].clone(),
            shift: render_with(&f.shift, &vars),
        })
        .collect()
}

impl From<&Verdict> for VerdictDoc {
    fn from(v: &Verdict) -> Self {
        VerdictDoc {
            status: v.status,
            rule: v.rule,
            citation: v.citation.clone(),
            witness: v.witness.as_ref().map(|w| PolyMapDoc::from_map(&w.map)),
            factorization: v.witness.as_ref().map(factor_docs),
            sorted_input: v.sorted_input,
        }
    }
}

/// A reduction, with coordinates 1-based and `g` written in `u, v`, which
/// stand for the components listed in `arguments`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionDoc {
    pub target: usize,
    pub arguments: [usize; 2],
    pub g: String,
    pub achieved_degree: ExtendedDegree,
    pub original_degree: ExtendedDegree,
}

impl ReductionDoc {
    pub fn new(r: &Reduction, map: &PolyMap) -> Self {
        ReductionDoc {
            target: r.target + 1,
            arguments: [r.arguments.0 + 1, r.arguments.1 + 1],
            g: render_with(&r.g, &["u", "v"]),
            achieved_degree: r.achieved_degree,
            original_degree: map.component(r.target).degree(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultidegreeDoc {
    pub multidegree: Vec<ExtendedDegree>,
}

impl From<&Multidegree> for MultidegreeDoc {
    fn from(m: &Multidegree) -> Self {
        MultidegreeDoc { multidegree: m.degrees().to_vec() }
    }
}
