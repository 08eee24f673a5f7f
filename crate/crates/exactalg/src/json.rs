//! JSON interchange for ideals.

use serde::{Deserialize, Serialize};

use crate::error::{AlgError, Result};
use crate::field::{Field, FieldDesc, PrimeField, Rationals};
use crate::ideal::Ideal;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum OrderJson {
    Grevlex,
    Lex,
    Block(usize),
}

impl From<MonomialOrder> for OrderJson {
    fn from(o: MonomialOrder) -> Self {
        match o {
            MonomialOrder::Grevlex => OrderJson::Grevlex,
            MonomialOrder::Lex => OrderJson::Lex,
            MonomialOrder::Block { elim } => OrderJson::Block(elim),
        }
    }
}

impl From<OrderJson> for MonomialOrder {
    fn from(o: OrderJson) -> Self {
        match o {
            OrderJson::Grevlex => MonomialOrder::Grevlex,
            OrderJson::Lex => MonomialOrder::Lex,
            OrderJson::Block(elim) => MonomialOrder::Block { elim },
        }
    }
}

/// Wire form: `{"field", "vars", "order", "gens": [[[coeff, [exps…]], …], …]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdealJson {
    pub field: FieldDesc,
    pub vars: Vec<String>,
    order: OrderJson,
    pub gens: Vec<Vec<(String, Vec<u16>)>>,
}

/// An ideal over either supported coefficient field.
#[derive(Debug, Clone)]
pub enum AnyIdeal {
    Q(Ideal<Rationals>),
    Fp(Ideal<PrimeField>),
}

impl IdealJson {
    pub fn from_ideal<F: Field>(ideal: &Ideal<F>) -> Self {
        let ring = ideal.ring();
        IdealJson {
            field: ring.field.desc(),
            vars: ring.vars.clone(),
            order: ring.order.into(),
            gens: ideal
                .gens()
                .iter()
                .map(|g| {
                    g.terms().iter().map(|(m, c)| (ring.field.format(c), m.exps().to_vec())).collect()
                })
                .collect(),
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order.into()
    }

    fn build<F: Field>(&self, field: F) -> Result<Ideal<F>> {
        let order: MonomialOrder = self.order.into();
        if let MonomialOrder::Block { elim } = order {
            if elim == 0 || elim > self.vars.len() {
                return Err(AlgError::Parse(format!("block size {elim} out of range")));
            }
        }
        let ring = Ring::from_names(field, self.vars.clone(), order);
        let mut gens = Vec::new();
        for g in &self.gens {
            let mut terms = Vec::new();
            for (c, e) in g {
                if e.len() != self.vars.len() {
                    return Err(AlgError::Parse(format!(
                        "exponent vector of length {} for {} variables",
                        e.len(),
                        self.vars.len()
                    )));
                }
                terms.push((Monomial::from_exps(e), ring.field.parse(c)?));
            }
            gens.push(Polynomial::from_terms(&ring, terms));
        }
        Ideal::new(gens)
    }

    pub fn to_ideal(&self) -> Result<AnyIdeal> {
        match self.field {
            FieldDesc::Q => Ok(AnyIdeal::Q(self.build(Rationals)?)),
            FieldDesc::Fp(p) => Ok(AnyIdeal::Fp(self.build(PrimeField::new(p)?)?)),
        }
    }
}

impl AnyIdeal {
    pub fn from_json(s: &str) -> Result<Self> {
        let j: IdealJson = serde_json::from_str(s).map_err(|e| AlgError::Parse(e.to_string()))?;
        j.to_ideal()
    }

    pub fn to_json(&self) -> IdealJson {
        match self {
            AnyIdeal::Q(i) => IdealJson::from_ideal(i),
            AnyIdeal::Fp(i) => IdealJson::from_ideal(i),
        }
    }
}

pub fn ideal_to_json_string<F: Field>(ideal: &Ideal<F>) -> String {
    serde_json::to_string(&IdealJson::from_ideal(ideal)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn roundtrip() {
        let r = Ring::new(PrimeField::new(5).unwrap(), &["x", "u"], MonomialOrder::Block { elim: 1 });
        let i = Ideal::new(vec![parse_poly(&r, "x^2 - u^2").unwrap(), parse_poly(&r, "3*x*u").unwrap()])
            .unwrap();
        let s = ideal_to_json_string(&i);
        assert!(s.contains("\"order\":{\"block\":1}"));
        assert!(s.contains("\"field\":{\"Fp\":5}"));
        match AnyIdeal::from_json(&s).unwrap() {
            AnyIdeal::Fp(j) => assert_eq!(j.gens(), i.gens()),
            AnyIdeal::Q(_) => panic!("wrong field"),
        }
        let q = r#"{"field":"Q","vars":["x"],"order":"grevlex","gens":[[["1/2",[1]]]]}"#;
        assert!(matches!(AnyIdeal::from_json(q).unwrap(), AnyIdeal::Q(_)));
    }
}
