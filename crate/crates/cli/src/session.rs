//! Evaluation of parsed scripts and rendering of command reports.

use std::collections::HashMap;
use std::fmt::Write as _;

use borelkit::borel::random::{rng_from_seed, SeededRng};
use borelkit::{
    associated_primes, associated_primes_by_witness, betti_table, check_initial_segment,
    decompose_structure, is_borel_by_truncation, is_borel_definitional, is_borel_exchange,
    is_borel_structural, random_borel, regularity, regularity_oracle, truncation_is_stable,
    BorelBudget, Error, Monomial, MonomialIdeal, RingContext,
};
use rand::RngCore;
use serde_json::{json, Map, Value};

use crate::ast::{Command, Expr, RandArgs, Script, Stmt};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub json: bool,
    pub seed: u64,
    pub betti_budget: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            json: false,
            seed: 0,
            betti_budget: borelkit::DEFAULT_BETTI_BUDGET,
        }
    }
}

/// One command's result, kept as key-sorted JSON plus a text rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub json: Value,
    pub text: String,
}

pub struct Session {
    opts: Options,
    ctx: Option<RingContext>,
    env: HashMap<String, MonomialIdeal>,
    rng: SeededRng,
}

/// Recursively rebuilds every object with its keys in sorted order.
pub fn sort_keys(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            let mut out = Map::new();
            for (k, v) in entries {
                out.insert(k, sort_keys(v));
            }
            Value::Object(out)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(sort_keys).collect()),
        other => other,
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

impl Session {
    pub fn new(opts: Options) -> Self {
        let rng = rng_from_seed(opts.seed);
        Self {
            opts,
            ctx: None,
            env: HashMap::new(),
            rng,
        }
    }

    fn ctx(&self) -> Result<&RingContext, Error> {
        self.ctx
            .as_ref()
            .ok_or_else(|| Error::Internal("ring not declared".into()))
    }

    pub fn eval(&self, expr: &Expr) -> Result<MonomialIdeal, Error> {
        let ctx = self.ctx()?;
        Ok(match expr {
            Expr::Literal(gens) => {
                let raw = gens
                    .iter()
                    .map(|m| Monomial::new(m.0.clone()))
                    .collect::<Result<Vec<_>, _>>()?;
                MonomialIdeal::new(ctx, raw)?
            }
            Expr::Ident(name) => self
                .env
                .get(name)
                .cloned()
                .ok_or_else(|| Error::Internal(format!("unbound identifier `{name}`")))?,
            Expr::Sum(a, b) => self.eval(a)?.sum(&self.eval(b)?)?,
            Expr::Product(a, b) => self.eval(a)?.product(&self.eval(b)?)?,
            Expr::Power(a, k) => self.eval(a)?.power(*k)?,
            Expr::Intersect(a, b) => self.eval(a)?.intersection(&self.eval(b)?)?,
            Expr::Colon(a, b) => self.eval(a)?.colon_ideal(&self.eval(b)?)?,
            Expr::Sat(a, b) => self.eval(a)?.saturate_ideal(&self.eval(b)?)?,
            Expr::Trunc(a, e) => self.eval(a)?.truncation(*e)?,
        })
    }

    /// Runs one statement; commands produce a report.
    pub fn run_stmt(&mut self, stmt: &Stmt) -> Result<Option<Report>, Error> {
        match stmt {
            Stmt::Ring(n) => {
                self.ctx = Some(RingContext::new(*n)?);
                Ok(None)
            }
            Stmt::Let(name, e) => {
                let value = self.eval(e)?;
                self.env.insert(name.clone(), value);
                Ok(None)
            }
            Stmt::Command(c) => self.run_command(c).map(Some),
        }
    }

    pub fn run_command(&mut self, cmd: &Command) -> Result<Report, Error> {
        let (mut fields, text) = match cmd {
            Command::IsBorel(e) => self.isborel(&self.eval(e)?)?,
            Command::Reg(e) => self.reg(&self.eval(e)?, false)?,
            Command::RegCheck(e) => self.reg(&self.eval(e)?, true)?,
            Command::Stable(e, d) => {
                let i = self.eval(e)?;
                let stable = truncation_is_stable(&i, *d)?;
                (
                    json!({ "ideal": i.to_string(), "e": d, "stable": stable }),
                    format!("stable {i} at {d}: {}\n", flag(stable)),
                )
            }
            Command::Decompose(e) => self.decompose(&self.eval(e)?)?,
            Command::Ass(e) => self.ass(&self.eval(e)?)?,
            Command::Betti(e) => {
                let i = self.eval(e)?;
                let table = betti_table(&i, self.opts.betti_budget)?;
                (
                    json!({ "ideal": i.to_string(), "betti": to_value(&table) }),
                    format!("betti {i}\n{}", table.render()),
                )
            }
            Command::Eq(a, b) => {
                let (i, j) = (self.eval(a)?, self.eval(b)?);
                let equal = i == j;
                (
                    json!({ "left": i.to_string(), "right": j.to_string(), "equal": equal }),
                    format!("eq {i} {j}: {}\n", flag(equal)),
                )
            }
            Command::RandBorel(args) => self.randborel(args)?,
            Command::Show(e) => {
                let i = self.eval(e)?;
                (
                    json!({ "ideal": i.to_string(), "gens": to_value(&i)["gens"].clone() }),
                    format!("{i}\n"),
                )
            }
        };
        fields
            .as_object_mut()
            .expect("reports are objects")
            .insert("command".into(), Value::String(cmd.name().into()));
        Ok(Report {
            json: sort_keys(fields),
            text,
        })
    }

    fn isborel(&self, i: &MonomialIdeal) -> Result<(Value, String), Error> {
        let definitional = is_borel_definitional(i)?;
        let exchange = is_borel_exchange(i)?;
        let structural = is_borel_structural(i)?;
        let truncation = is_borel_by_truncation(i)?;
        let agree = [exchange, structural, truncation]
            .iter()
            .all(|&x| x == definitional);
        let text = format!(
            "isborel {i}\n  definitional: {}\n  exchange: {}\n  structural: {}\n  truncation: {}\n  agree: {}\n",
            flag(definitional),
            flag(exchange),
            flag(structural),
            flag(truncation),
            flag(agree)
        );
        Ok((
            json!({
                "ideal": i.to_string(),
                "definitional": definitional,
                "exchange": exchange,
                "structural": structural,
                "truncation": truncation,
                "agree": agree,
            }),
            text,
        ))
    }

    fn reg(&self, i: &MonomialIdeal, check: bool) -> Result<(Value, String), Error> {
        let cert = regularity(i)?;
        let trace: Vec<String> = cert
            .trace
            .iter()
            .map(|s| format!("{}:{}", s.e, if s.stable { "stable" } else { "unstable" }))
            .collect();
        let mut text = format!(
            "{} {i}\n  reg: {}\n  bound: {}\n  trace: {}\n",
            if check { "regcheck" } else { "reg" },
            cert.reg,
            cert.bound_used,
            trace.join(" ")
        );
        let mut fields = json!({ "ideal": i.to_string(), "certificate": to_value(&cert) });
        if check {
            let oracle = regularity_oracle(i, self.opts.betti_budget)?;
            let equal = oracle == cert.reg;
            let _ = write!(text, "  oracle: {oracle}\n  equal: {}\n", flag(equal));
            let obj = fields.as_object_mut().expect("object");
            obj.insert("oracle".into(), json!(oracle));
            obj.insert("equal".into(), json!(equal));
        }
        Ok((fields, text))
    }

    fn decompose(&self, i: &MonomialIdeal) -> Result<(Value, String), Error> {
        let s = decompose_structure(i)?;
        let ctx = i.ctx();
        let counts = s.stratum_counts();
        let mut text = format!("decompose {i}\n  q: {}\n", s.q);
        let pure: Vec<String> = s
            .pure
            .iter()
            .enumerate()
            .map(|(k, a)| format!("x{}^{a}", k + 1))
            .collect();
        let _ = writeln!(text, "  pure: {}", pure.join(", "));
        let s0: Vec<String> = s.stratum0.iter().map(|v| ctx.format_monomial(v)).collect();
        let _ = writeln!(
            text,
            "  stratum 0: {}",
            if s0.is_empty() {
                "-".into()
            } else {
                s0.join(", ")
            }
        );
        for (k, stratum) in s.strata.iter().enumerate() {
            let var = s.q + k + 1;
            let entries: Vec<String> = stratum
                .iter()
                .map(|e| format!("{} * x{var}^{}", ctx.format_monomial(&e.v), e.a))
                .collect();
            let _ = writeln!(
                text,
                "  stratum {}: {}",
                k + 1,
                if entries.is_empty() {
                    "-".into()
                } else {
                    entries.join(", ")
                }
            );
        }
        let counts_text: Vec<String> = counts.iter().map(usize::to_string).collect();
        let _ = writeln!(text, "  r: ({})", counts_text.join(","));
        Ok((
            json!({ "ideal": i.to_string(), "structure": to_value(&s), "r": counts }),
            text,
        ))
    }

    fn ass(&self, i: &MonomialIdeal) -> Result<(Value, String), Error> {
        let primes = associated_primes(i)?;
        let witness = associated_primes_by_witness(i, self.opts.betti_budget)?;
        let agree = primes == witness;
        let initial = check_initial_segment(&primes);
        let listed: Vec<String> = primes
            .primes
            .iter()
            .map(|p| {
                let vars: Vec<String> = p.iter().map(|k| format!("x{k}")).collect();
                format!("({})", vars.join(", "))
            })
            .collect();
        let text = format!(
            "ass {i}\n  primes: {}\n  methods agree: {}\n  initial segments: {}\n",
            listed.join(" "),
            flag(agree),
            flag(initial)
        );
        Ok((
            json!({
                "ideal": i.to_string(),
                "primes": to_value(&primes),
                "agree": agree,
                "initial_segments": initial,
            }),
            text,
        ))
    }

    fn randborel(&mut self, args: &RandArgs) -> Result<(Value, String), Error> {
        let ctx = self.ctx()?.clone();
        let n = ctx.n();
        let seed = match args.seed {
            Some(s) => s,
            None => self.rng.next_u64(),
        };
        let sizes = match &args.sizes {
            Some(s) => s.clone(),
            None => vec![1; n.saturating_sub(args.q) + 1],
        };
        let budget = BorelBudget {
            q: args.q,
            max_exponent: args.maxexp.unwrap_or(3),
            stratum_sizes: sizes,
        };
        let i = random_borel(&ctx, &budget, seed)?;
        Ok((
            json!({ "ideal": i.to_string(), "seed": seed, "budget": to_value(&budget) }),
            format!("randborel seed={seed}: {i}\n"),
        ))
    }
}

/// Exit-code classes.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::DegenerateIdeal(_) => 3,
        Error::BudgetExceeded { .. } | Error::InfeasibleBudget(_) => 4,
        Error::NotBorelType(_) | Error::StructureViolation(_) => 5,
        _ => 1,
    }
}

/// Result of running a whole script.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub reports: Vec<Report>,
    /// Rendered output: text blocks, or one JSON document per line.
    pub output: String,
    pub error: Option<String>,
    pub exit_code: i32,
}

pub fn run_script(script: &Script, opts: &Options) -> Outcome {
    let mut session = Session::new(opts.clone());
    let mut reports = Vec::new();
    let mut output = String::new();
    for stmt in &script.stmts {
        match session.run_stmt(stmt) {
            Ok(Some(r)) => {
                if opts.json {
                    output.push_str(&serde_json::to_string(&r.json).expect("json"));
                    output.push('\n');
                } else {
                    output.push_str(&r.text);
                }
                reports.push(r);
            }
            Ok(None) => {}
            Err(e) => {
                return Outcome {
                    reports,
                    output,
                    exit_code: exit_code(&e),
                    error: Some(format!("{stmt}: {e}")),
                };
            }
        }
    }
    Outcome {
        reports,
        output,
        error: None,
        exit_code: 0,
    }
}

/// Parses and runs `src`. Parse failures exit with code 2 before anything runs.
pub fn run_source(src: &str, opts: &Options) -> Outcome {
    match crate::parse::parse(src) {
        Ok(script) => run_script(&script, opts),
        Err(e) => Outcome {
            reports: Vec::new(),
            output: String::new(),
            error: Some(format!("parse error at {e}")),
            exit_code: 2,
        },
    }
}
