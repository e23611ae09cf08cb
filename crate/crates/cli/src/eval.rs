//! Sort-directed evaluation of parsed expressions.
//!
//! Every sub-expression is evaluated in an expected sort. `ot` switches its
//! operands to the two tensor factors, and function calls fix the sorts of
//! their arguments. Results of a narrower sort are lifted (for example a
//! `U(g)` value becomes `u ⊗ 1` in `U(g) ⊗ C(p)`).

use std::cell::OnceCell;
use std::fmt;

use so41_core::clifford::{chevalley, cl_multiply};
use so41_core::scalar::q;
use so41_core::sym_ext::{ad_action_se, build_st_catalog, se_multiply};
use so41_core::tensor::{build_catalog_from, TensorAlgebra};
use so41_core::uea::{ad_action_s, ad_action_u, symmetrize, u_multiply};
use so41_core::{
    CElement, Convention, ExtElement, LieElement, NamedElementCatalog, SEElement, SElement, STCatalog,
    StructureConstants, UCElement, UElement, Q,
};
use thiserror::Error;

use crate::parse::{Expr, Func};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sort {
    UC,
    U,
    C,
    SE,
    S,
    Ext,
    Lie,
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sort::UC => "U(g) ⊗ C(p)",
            Sort::U => "U(g)",
            Sort::C => "C(p)",
            Sort::SE => "S(g) ⊗ Λ(p)",
            Sort::S => "S(g)",
            Sort::Ext => "Λ(p)",
            Sort::Lie => "g",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    UC(UCElement),
    U(UElement),
    C(CElement),
    SE(SEElement),
    S(SElement),
    Ext(ExtElement),
    Lie(LieElement),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::UC(x) => write!(f, "{x}"),
            Value::U(x) => write!(f, "{x}"),
            Value::C(x) => write!(f, "{x}"),
            Value::SE(x) => write!(f, "{x}"),
            Value::S(x) => write!(f, "{x}"),
            Value::Ext(x) => write!(f, "{x}"),
            Value::Lie(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("type error: {0}")]
    Type(String),
    #[error(transparent)]
    Engine(#[from] so41_core::Error),
}

type Result<T> = std::result::Result<T, EvalError>;

fn type_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(EvalError::Type(msg.into()))
}

/// Holds the algebra and lazily built element catalogs.
pub struct Evaluator {
    alg: TensorAlgebra,
    st: OnceCell<STCatalog>,
    catalog: OnceCell<NamedElementCatalog>,
}

impl Evaluator {
    pub fn new(convention: Convention) -> Self {
        Self {
            alg: TensorAlgebra::new(convention),
            st: OnceCell::new(),
            catalog: OnceCell::new(),
        }
    }

    pub fn algebra(&self) -> &TensorAlgebra {
        &self.alg
    }

    pub fn st_catalog(&self) -> Result<&STCatalog> {
        if self.st.get().is_none() {
            let _ = self.st.set(build_st_catalog()?);
        }
        Ok(self.st.get().expect("set above"))
    }

    pub fn catalog(&self) -> Result<&NamedElementCatalog> {
        if self.catalog.get().is_none() {
            let cat = build_catalog_from(&self.alg, self.st_catalog()?)?;
            let _ = self.catalog.set(cat);
        }
        Ok(self.catalog.get().expect("set above"))
    }

    pub fn eval(&self, e: &Expr, sort: Sort) -> Result<Value> {
        match e {
            Expr::Num(x) => self.scalar(x, sort),
            Expr::Gen(b) => {
                let b = *b;
                let need_p = || -> Result<()> {
                    if b.is_p() {
                        Ok(())
                    } else {
                        type_err(format!("{b} is not in p, so it has no image in {sort}"))
                    }
                };
                Ok(match sort {
                    Sort::UC => Value::UC(UCElement::from_u(&UElement::generator(b))),
                    Sort::U => Value::U(UElement::generator(b)),
                    Sort::C => {
                        need_p()?;
                        Value::C(CElement::generator(b).expect("p generator"))
                    }
                    Sort::SE => Value::SE(SEElement::s(b)),
                    Sort::S => Value::S(SElement::generator(b)),
                    Sort::Ext => {
                        need_p()?;
                        Value::Ext(ExtElement::generator(b).expect("p generator"))
                    }
                    Sort::Lie => Value::Lie(LieElement::basis(b)),
                })
            }
            Expr::Named(name) => match sort {
                Sort::UC => Ok(Value::UC(self.catalog()?.get(name).expect("known name").clone())),
                Sort::SE => match self.st_catalog()?.get(name) {
                    Some(x) => Ok(Value::SE(x.clone())),
                    None => type_err(format!("{name} has no counterpart in {sort}")),
                },
                _ => type_err(format!("named element {name} used in {sort}; it lives in U(g) ⊗ C(p) or S(g) ⊗ Λ(p)")),
            },
            Expr::Neg(x) => Ok(neg(self.eval(x, sort)?)),
            Expr::Add(a, b) => add(self.eval(a, sort)?, self.eval(b, sort)?, false),
            Expr::Sub(a, b) => add(self.eval(a, sort)?, self.eval(b, sort)?, true),
            Expr::Mul(a, b) => {
                if let Expr::Num(c) = &**a {
                    return Ok(scale(self.eval(b, sort)?, c));
                }
                self.mul(self.eval(a, sort)?, self.eval(b, sort)?)
            }
            Expr::Pow(x, n) => {
                let base = self.eval(x, sort)?;
                let mut acc = self.scalar(&q(1), sort)?;
                for _ in 0..*n {
                    acc = self.mul(acc, base.clone())?;
                }
                Ok(acc)
            }
            Expr::Tensor(a, b) => match sort {
                Sort::UC => match (self.eval(a, Sort::U)?, self.eval(b, Sort::C)?) {
                    (Value::U(u), Value::C(c)) => Ok(Value::UC(UCElement::tensor(&u, &c))),
                    _ => unreachable!("sorted evaluation"),
                },
                Sort::SE => match (self.eval(a, Sort::S)?, self.eval(b, Sort::Ext)?) {
                    (Value::S(s), Value::Ext(x)) => Ok(Value::SE(SEElement::tensor(&s, &x))),
                    _ => unreachable!("sorted evaluation"),
                },
                _ => type_err(format!("`ot` used inside {sort}")),
            },
            Expr::Wedge(a, b) => {
                let (Value::Ext(x), Value::Ext(y)) = (self.eval(a, Sort::Ext)?, self.eval(b, Sort::Ext)?) else {
                    unreachable!("sorted evaluation")
                };
                lift(Value::Ext(x.wedge(&y)), sort)
            }
            Expr::Call(func, args) => self.call(*func, args, sort),
        }
    }

    fn scalar(&self, c: &Q, sort: Sort) -> Result<Value> {
        Ok(match sort {
            Sort::UC => Value::UC(UCElement::scalar(c.clone())),
            Sort::U => Value::U(UElement::scalar(c.clone())),
            Sort::C => Value::C(CElement::scalar(c.clone())),
            Sort::SE => Value::SE(SEElement::scalar(c.clone())),
            Sort::S => Value::S(SElement::term(Default::default(), c.clone())),
            Sort::Ext => Value::Ext(ExtElement::term(Default::default(), c.clone())),
            Sort::Lie if *c == q(0) => Value::Lie(LieElement::zero()),
            Sort::Lie => return type_err("a nonzero scalar is not an element of g"),
        })
    }

    fn mul(&self, a: Value, b: Value) -> Result<Value> {
        let form = &self.alg.form;
        Ok(match (a, b) {
            (Value::UC(x), Value::UC(y)) => Value::UC(self.alg.multiply(&x, &y)),
            (Value::U(x), Value::U(y)) => Value::U(u_multiply(&x, &y)),
            (Value::C(x), Value::C(y)) => Value::C(cl_multiply(form, &x, &y)),
            (Value::SE(x), Value::SE(y)) => Value::SE(se_multiply(&x, &y)),
            (Value::S(x), Value::S(y)) => Value::S(x.mul(&y)),
            (Value::Ext(x), Value::Ext(y)) => Value::Ext(x.wedge(&y)),
            (Value::Lie(_), Value::Lie(_)) => return type_err("`*` between elements of g; use ad(x, y)"),
            _ => unreachable!("operands share a sort"),
        })
    }

    fn call(&self, func: Func, args: &[Expr], sort: Sort) -> Result<Value> {
        match func {
            Func::Ad => {
                let Value::Lie(z) = self.eval(&args[0], Sort::Lie)? else {
                    unreachable!()
                };
                let x = self.eval(&args[1], sort)?;
                Ok(match x {
                    Value::UC(x) => Value::UC(self.alg.ad(&z, &x)?),
                    Value::U(x) => Value::U(ad_action_u(&z, &x)),
                    Value::C(x) => Value::C(so41_core::clifford::k_action_c(&self.alg.form, &z, &x)?),
                    Value::SE(x) => Value::SE(ad_action_se(&z, &x)?),
                    Value::S(x) => Value::S(ad_action_s(&z, &x)),
                    Value::Ext(x) => Value::Ext(so41_core::clifford::k_action_ext(&z, &x)?),
                    Value::Lie(x) => Value::Lie(StructureConstants::global().bracket(&z, &x)),
                })
            }
            Func::Sigma => {
                let Value::S(x) = self.eval(&args[0], Sort::S)? else {
                    unreachable!()
                };
                lift(Value::U(symmetrize(&x)), sort)
            }
            Func::Tau => {
                let Value::Ext(x) = self.eval(&args[0], Sort::Ext)? else {
                    unreachable!()
                };
                lift(Value::C(chevalley(&self.alg.form, &x)), sort)
            }
            Func::Rho => {
                let Value::SE(x) = self.eval(&args[0], Sort::SE)? else {
                    unreachable!()
                };
                lift(Value::UC(self.alg.rho(&x)), sort)
            }
        }
    }
}

/// Lifts `v` into `sort` along `U → U⊗C`, `C → U⊗C`, `S → S⊗Λ`, `Λ → S⊗Λ`.
pub fn lift(v: Value, sort: Sort) -> Result<Value> {
    Ok(match (v, sort) {
        (v @ Value::UC(_), Sort::UC)
        | (v @ Value::U(_), Sort::U)
        | (v @ Value::C(_), Sort::C)
        | (v @ Value::SE(_), Sort::SE)
        | (v @ Value::S(_), Sort::S)
        | (v @ Value::Ext(_), Sort::Ext)
        | (v @ Value::Lie(_), Sort::Lie) => v,
        (Value::U(u), Sort::UC) => Value::UC(UCElement::from_u(&u)),
        (Value::C(c), Sort::UC) => Value::UC(UCElement::from_c(&c)),
        (Value::S(s), Sort::SE) => Value::SE(SEElement::from_s(&s)),
        (Value::Ext(e), Sort::SE) => Value::SE(SEElement::from_ext(&e)),
        (v, sort) => return type_err(format!("a value of {} cannot be used in {sort}", sort_of(&v))),
    })
}

pub fn sort_of(v: &Value) -> Sort {
    match v {
        Value::UC(_) => Sort::UC,
        Value::U(_) => Sort::U,
        Value::C(_) => Sort::C,
        Value::SE(_) => Sort::SE,
        Value::S(_) => Sort::S,
        Value::Ext(_) => Sort::Ext,
        Value::Lie(_) => Sort::Lie,
    }
}

fn neg(v: Value) -> Value {
    scale(v, &q(-1))
}

fn scale(v: Value, c: &Q) -> Value {
    match v {
        Value::UC(x) => Value::UC(x.scale(c)),
        Value::U(x) => Value::U(x.scale(c)),
        Value::C(x) => Value::C(x.scale(c)),
        Value::SE(x) => Value::SE(x.scale(c)),
        Value::S(x) => Value::S(x.scale(c)),
        Value::Ext(x) => Value::Ext(x.scale(c)),
        Value::Lie(x) => Value::Lie(x.scale(c)),
    }
}

fn add(a: Value, b: Value, subtract: bool) -> Result<Value> {
    let b = if subtract { neg(b) } else { b };
    Ok(match (a, b) {
        (Value::UC(x), Value::UC(y)) => Value::UC(&x + &y),
        (Value::U(x), Value::U(y)) => Value::U(&x + &y),
        (Value::C(x), Value::C(y)) => Value::C(&x + &y),
        (Value::SE(x), Value::SE(y)) => Value::SE(&x + &y),
        (Value::S(x), Value::S(y)) => Value::S(&x + &y),
        (Value::Ext(x), Value::Ext(y)) => Value::Ext(&x + &y),
        (Value::Lie(x), Value::Lie(y)) => Value::Lie(&x + &y),
        _ => unreachable!("operands share a sort"),
    })
}
