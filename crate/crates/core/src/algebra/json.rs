//! JSON encoding of polynomials and rational functions.
//!
//! `{"vars":["x","y","z"],"terms":[{"e":[ex,ey,ez],"c":"a/b"}]}`, terms in lexicographic
//! exponent order; rational functions as `{"num":…,"den":…}`.

use serde::{Deserialize, Serialize};

use super::poly::{LaurentPoly3, Monomial};
use super::ratfunc::RatFunc3;
use super::rational::parse_rational;
use super::AlgebraError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyDoc {
    pub vars: Vec<String>,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermDoc {
    pub e: [i64; 3],
    pub c: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatFuncDoc {
    pub num: PolyDoc,
    pub den: PolyDoc,
}

impl From<&LaurentPoly3> for PolyDoc {
    fn from(p: &LaurentPoly3) -> Self {
        PolyDoc {
            vars: vec!["x".into(), "y".into(), "z".into()],
            terms: p
                .terms()
                .map(|(m, c)| TermDoc {
                    e: [m.x as i64, m.y as i64, m.z as i64],
                    c: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolyDoc> for LaurentPoly3 {
    type Error = AlgebraError;

    fn try_from(doc: &PolyDoc) -> Result<Self, AlgebraError> {
        if doc.vars != ["x", "y", "z"] {
            return Err(AlgebraError::Parse(format!(
                "polynomial vars must be [\"x\",\"y\",\"z\"], got {:?}",
                doc.vars
            )));
        }
        let mut p = LaurentPoly3::zero();
        let mut last: Option<Monomial> = None;
        for t in &doc.terms {
            let [ex, ey, ez] = t.e;
            if ez < 0 {
                return Err(AlgebraError::Parse(format!("negative z exponent {ez}")));
            }
            let small = |v: i64| i32::try_from(v).map_err(|_| AlgebraError::Parse(format!("exponent {v} out of range")));
            let m = Monomial::new(small(ex)?, small(ey)?, small(ez)? as u32);
            if last.is_some_and(|l| l >= m) {
                return Err(AlgebraError::Parse("terms must be sorted and unique".into()));
            }
            last = Some(m);
            let c = parse_rational(&t.c)?;
            if num_traits::Zero::is_zero(&c) {
                return Err(AlgebraError::Parse("zero coefficient stored".into()));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }
}

impl From<&RatFunc3> for RatFuncDoc {
    fn from(f: &RatFunc3) -> Self {
        RatFuncDoc {
            num: f.numerator().into(),
            den: f.denominator().into(),
        }
    }
}

pub fn poly_to_json(p: &LaurentPoly3) -> serde_json::Value {
    serde_json::to_value(PolyDoc::from(p)).expect("serializable")
}

pub fn poly_from_json(v: &serde_json::Value) -> Result<LaurentPoly3, AlgebraError> {
    let doc: PolyDoc = serde_json::from_value(v.clone()).map_err(|e| AlgebraError::Parse(e.to_string()))?;
    LaurentPoly3::try_from(&doc)
}

pub fn ratfunc_to_json(f: &RatFunc3) -> serde_json::Value {
    serde_json::to_value(RatFuncDoc::from(f)).expect("serializable")
}

pub fn ratfunc_from_json(v: &serde_json::Value) -> Result<RatFunc3, AlgebraError> {
    let doc: RatFuncDoc = serde_json::from_value(v.clone()).map_err(|e| AlgebraError::Parse(e.to_string()))?;
    RatFunc3::new(LaurentPoly3::try_from(&doc.num)?, LaurentPoly3::try_from(&doc.den)?)
}
