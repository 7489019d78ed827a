//! JSON recipes for building codes from the CLI. Matrices are written as
//! rows of 0/1 characters; polynomial entries as exponent lists.

use crate::code::{BbsSpec, CssCode};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::f2::F2Matrix;
use crate::fixtures;
use crate::poly::PolyMatrix;
use crate::products::{self, GroupAction, TwistSpec};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct PolyMatrixSpec {
    pub rows: usize,
    pub cols: usize,
    /// Row-major exponent lists, one per entry.
    pub entries: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "construction", rename_all = "snake_case")]
pub enum Recipe {
    /// Hand-written check matrices. Validity is checked downstream.
    Classical { hx: Vec<String>, hz: Vec<String> },
    Hgp {
        h1: Vec<String>,
        h2: Vec<String>,
    },
    Tensor {
        h1: Vec<String>,
        h2: Vec<String>,
    },
    FiberBundle {
        base: Vec<String>,
        fiber: Vec<String>,
        /// (check, bit, shift) triples; unlisted incidences are untwisted.
        #[serde(default)]
        twist: Vec<(usize, usize, usize)>,
    },
    Lifted {
        ell: usize,
        a: PolyMatrixSpec,
        b: PolyMatrixSpec,
    },
    Balanced {
        c: Vec<String>,
        d: Vec<String>,
        /// Generator permutation per degree of c (bits, then checks order
        /// follows the complex convention: index 0 permutes checks C_0,
        /// index 1 permutes bits C_1).
        right: Vec<Vec<usize>>,
        left: Vec<Vec<usize>>,
    },
    DistanceBalance {
        code: Box<Recipe>,
        h: Vec<String>,
    },
    Bbs {
        #[serde(default)]
        a: Option<Vec<String>>,
        #[serde(default)]
        g1: Option<Vec<String>>,
        #[serde(default)]
        q: Option<Vec<String>>,
        #[serde(default)]
        g2: Option<Vec<String>>,
    },
    Fixture {
        name: String,
    },
}

fn matrix(rows: &[String]) -> Result<F2Matrix> {
    let refs: Vec<&str> = rows.iter().map(String::as_str).collect();
    F2Matrix::from_rows(&refs)
}

impl Recipe {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("recipe JSON: {e}")))
    }

    /// A classical recipe reproducing the given code byte-for-byte.
    pub fn canonical(code: &CssCode) -> Self {
        let rows = |m: &F2Matrix| (0..m.rows()).map(|i| m.row(i).to_bit_string()).collect();
        Recipe::Classical {
            hx: rows(code.hx()),
            hz: rows(code.hz()),
        }
    }

    pub fn is_bbs(&self) -> bool {
        matches!(self, Recipe::Bbs { .. })
    }

    /// Builds the CSS code this recipe describes. Not defined for BBS
    /// recipes, which describe subsystem codes; see [`Recipe::build_bbs`].
    pub fn build(&self) -> Result<CssCode> {
        match self {
            Recipe::Classical { hx, hz } => CssCode::new(matrix(hx)?, matrix(hz)?),
            Recipe::Hgp { h1, h2 } => Ok(products::hypergraph_product(&matrix(h1)?, &matrix(h2)?)),
            Recipe::Tensor { h1, h2 } => {
                let c = ChainComplex::from_classical(&matrix(h1)?);
                let d = ChainComplex::from_classical(&matrix(h2)?);
                products::tensor(&c, &d).to_css(1)
            }
            Recipe::FiberBundle { base, fiber, twist } => {
                let b = ChainComplex::from_classical(&matrix(base)?);
                let f = ChainComplex::from_classical(&matrix(fiber)?);
                let spec = TwistSpec::new(twist.iter().map(|&(c, q, s)| ((c, q), s)));
                products::fiber_bundle(&b, &f, &spec)
            }
            Recipe::Lifted { ell, a, b } => {
                let a = PolyMatrix::from_exponents(a.rows, a.cols, *ell, &a.entries)?;
                let b = PolyMatrix::from_exponents(b.rows, b.cols, *ell, &b.entries)?;
                products::lifted_product(&a, &b)
            }
            Recipe::Balanced { c, d, right, left } => {
                let cc = ChainComplex::from_classical(&matrix(c)?);
                let dc = ChainComplex::from_classical(&matrix(d)?);
                let act = GroupAction::cyclic(right.clone(), left.clone());
                products::balanced_product(&cc, &dc, &act)?.to_css(1)
            }
            Recipe::DistanceBalance { code, h } => {
                let inner = code.build()?;
                if !inner.validate() {
                    return Err(Error::Invalid(
                        "inner code violates the CSS commutation condition".into(),
                    ));
                }
                Ok(products::distance_balance(&inner, &matrix(h)?))
            }
            Recipe::Bbs { .. } => Err(Error::Invalid(
                "a Bravyi-Bacon-Shor recipe describes a subsystem code; only parameter \
                 reporting is supported"
                    .into(),
            )),
            Recipe::Fixture { name } => fixtures::by_name(name),
        }
    }

    pub fn build_bbs(&self) -> Result<BbsSpec> {
        let Recipe::Bbs { a, g1, q, g2 } = self else {
            return Err(Error::Invalid("not a Bravyi-Bacon-Shor recipe".into()));
        };
        match (a, g1, q, g2) {
            (Some(a), None, None, None) => Ok(BbsSpec::new(matrix(a)?)),
            (None, Some(g1), Some(q), Some(g2)) => {
                BbsSpec::yoder(&matrix(g1)?, &matrix(q)?, &matrix(g2)?)
            }
            _ => Err(Error::Parse(
                "a BBS recipe needs either `a` or all of `g1`, `q`, `g2`".into(),
            )),
        }
    }
}
