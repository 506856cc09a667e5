//! Expression evaluation with the named elements of the Hecke context:
//! `b1..bn`, and for `n = 2` also `u`, `C3`, `Ysym`, `Y12_3`, `Y13_2`,
//! `Yasym`.

use crate::clifford::Algebra;
use crate::expr::{self, Env, Mode};
use crate::exterior::Multivector;
use crate::hecke::HeckeContext;
use crate::young::{self, YoungLabel, YoungOp};
use crate::{Error, Result};
use std::sync::OnceLock;

pub struct Session {
    ctx: HeckeContext,
    young: OnceLock<Result<Vec<YoungOp>>>,
}

impl Session {
    pub fn new(ctx: HeckeContext) -> Session {
        Session { ctx, young: OnceLock::new() }
    }

    pub fn ctx(&self) -> &HeckeContext {
        &self.ctx
    }

    /// Parse and evaluate a multivector expression.
    pub fn eval(&self, text: &str) -> Result<Multivector> {
        let ast = expr::parse(text, Mode::Multivector)?;
        expr::eval_multivector(&ast, self)
    }

    fn young(&self, label: YoungLabel) -> Result<Multivector> {
        let ops = self.young.get_or_init(|| young::young_operators(&self.ctx));
        match ops {
            Ok(ops) => Ok(young::op(ops, label)?.value.clone()),
            Err(e) => Err(e.clone()),
        }
    }
}

impl Env for Session {
    fn dim(&self) -> usize {
        self.ctx.dim()
    }

    fn algebra(&self) -> Option<&Algebra> {
        Some(self.ctx.alg())
    }

    fn lookup(&self, name: &str) -> Option<Result<Multivector>> {
        if let Some(i) = name.strip_prefix('b').and_then(|d| d.parse::<usize>().ok()) {
            return Some(self.ctx.generator(i));
        }
        let needs_two = |f: &dyn Fn() -> Result<Multivector>| {
            if self.ctx.n() != 2 {
                return Err(Error::WrongN { expected: 2, got: self.ctx.n() });
            }
            f()
        };
        Some(match name {
            "u" => needs_two(&|| Ok(young::odd_element(&self.ctx))),
            "C3" => needs_two(&|| self.ctx.class_sum()),
            _ => {
                let label = YoungLabel::from_name(name)?;
                needs_two(&|| self.young(label))
            }
        })
    }
}
