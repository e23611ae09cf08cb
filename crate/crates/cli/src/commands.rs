//! Glue between parsed command-line options and the engine.

use std::fmt::Write as _;
use std::path::Path;

use so41_core::invariants::{invariant_basis, Method};
use so41_core::sym_ext::build_st_catalog;
use so41_core::verify::{
    best_run, candidate_conventions, dims_suite, form_label, generator_suite, independence_suite, invariance_suite,
    relations_suite, run_relations, sign_label, table_suite, FormChoice, SignChoice, SuiteOutput,
};
use so41_core::Convention;
use thiserror::Error;

use crate::element_file::{Element, ElementFile, FormatError};
use crate::eval::{EvalError, Evaluator, Sort, Value};
use crate::parse::{parse, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Engine(#[from] so41_core::Error),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Table,
    Relations,
    Invariance,
    Generators,
    Dims,
    Independence,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub sign: SignChoice,
    pub form: FormChoice,
    pub ambient: Sort,
    pub max_degree: Option<usize>,
    pub seed: u64,
    pub method: Method,
    pub allow_large: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            sign: SignChoice::Auto,
            form: FormChoice::Auto,
            ambient: Sort::UC,
            max_degree: None,
            seed: 0,
            method: Method::Auto,
            allow_large: false,
        }
    }
}

/// A single convention: the requested one, or among the candidates allowed by
/// the options the one satisfying the most identities.
pub fn resolve_convention(opts: &Options) -> Result<Convention, CliError> {
    let candidates = candidate_conventions(opts.sign, opts.form);
    if candidates.len() == 1 {
        return Ok(candidates.into_iter().next().expect("one candidate"));
    }
    let st = build_st_catalog()?;
    let runs = candidates
        .iter()
        .map(|c| run_relations(c, &st).map(|(r, _)| r))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(best_run(&runs).expect("non-empty").convention.clone())
}

fn convention_line(c: &Convention) -> String {
    format!("CONVENTION sign={} form={}", sign_label(c), form_label(c))
}

pub fn run_suite(suite: Suite, opts: &Options) -> Result<SuiteOutput, CliError> {
    Ok(match suite {
        Suite::Table => table_suite()?,
        Suite::Relations => relations_suite(opts.sign, opts.form)?.output,
        Suite::Invariance | Suite::Generators => {
            let conv = resolve_convention(opts)?;
            let mut out = if suite == Suite::Invariance {
                invariance_suite(&conv)?
            } else {
                generator_suite(&conv)?
            };
            out.lines.insert(0, convention_line(&conv));
            out
        }
        Suite::Dims => dims_suite(opts.max_degree.unwrap_or(5), method_with_seed(opts), opts.allow_large)?,
        Suite::Independence => {
            let conv = resolve_convention(opts)?;
            let mut out = independence_suite(opts.max_degree.unwrap_or(6), &conv)?;
            out.lines.insert(0, convention_line(&conv));
            out
        }
    })
}

fn method_with_seed(opts: &Options) -> Method {
    match opts.method {
        Method::ModP { .. } => Method::ModP { seed: opts.seed },
        m => m,
    }
}

/// Writes certified kernel bases for degrees `0..=max_degree`, one file per vector.
pub fn emit_basis(dir: &Path, opts: &Options) -> Result<usize, CliError> {
    std::fs::create_dir_all(dir)?;
    let mut written = 0;
    for n in 0..=opts.max_degree.unwrap_or(5) {
        for (k, x) in invariant_basis(n, opts.allow_large)?.into_iter().enumerate() {
            let f = ElementFile {
                convention: Convention::default(),
                element: Element::SE(x),
            };
            std::fs::write(dir.join(format!("invariant_deg{n}_{k:03}.elem")), f.serialize())?;
            written += 1;
        }
    }
    Ok(written)
}

pub fn eval_expr(src: &str, opts: &Options) -> Result<Value, CliError> {
    let expr = parse(src)?;
    let ev = Evaluator::new(resolve_convention(opts)?);
    Ok(ev.eval(&expr, opts.ambient)?)
}

pub fn dump(name: &str, opts: &Options) -> Result<ElementFile, CliError> {
    if !crate::parse::NAMED.contains(&name) {
        return Err(CliError::Usage(format!(
            "unknown element `{name}`; expected one of {}",
            crate::parse::NAMED.join(", ")
        )));
    }
    let convention = resolve_convention(opts)?;
    let ev = Evaluator::new(convention.clone());
    let element = match ev.eval(&parse(name)?, opts.ambient)? {
        Value::UC(x) => Element::UC(x),
        Value::SE(x) => Element::SE(x),
        _ => return Err(CliError::Usage("dump supports the uc and se ambients".into())),
    };
    Ok(ElementFile { convention, element })
}

/// Summary of a loaded file: header fields, term count, invariance, and the text form.
pub fn describe(file: &ElementFile) -> Result<String, CliError> {
    let mut out = String::new();
    writeln!(out, "{}", convention_line(&file.convention)).unwrap();
    match &file.element {
        Element::UC(x) => {
            let alg = so41_core::tensor::TensorAlgebra::new(file.convention.clone());
            writeln!(out, "ALGEBRA uc terms={} invariant={}", x.len(), alg.is_invariant(x)).unwrap();
            writeln!(out, "{x}").unwrap();
        }
        Element::SE(x) => {
            writeln!(
                out,
                "ALGEBRA se terms={} invariant={}",
                x.len(),
                so41_core::sym_ext::is_invariant_se(x)
            )
            .unwrap();
            writeln!(out, "{x}").unwrap();
        }
    }
    Ok(out)
}
