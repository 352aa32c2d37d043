//! Command dispatch: calls into the core library and builds the report.

use std::io::Write;

use cyldelta_core::model::{
    bessel_order, coupling_strength_parameter, EnergyLevel, PhysicalParams, QuantumNumbers,
};
use cyldelta_core::specfun::{
    bessel_j, bessel_j_derivative, bessel_zero, compare_zero_approximations,
};
use cyldelta_core::spectrum::{classify, critical_radius, spectrum_table, ReferenceState};
use cyldelta_core::wells::{
    analytic_limits, bound_state_at, excited_state, ground_state, level_splitting, BoundState,
};
use cyldelta_core::{Result, ZeroApproxMode};
use serde_json::{json, Map, Value};

use crate::config::{Command, RunConfig};
use crate::output::{num, render, Report, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Runs the command and writes its output. Returns the exit status.
pub fn run(config: &RunConfig) -> i32 {
    let report = match build_report(config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_COMPUTE;
        }
    };
    let text = render(&report, config.output_format);
    let written = match &config.output_path {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
        }
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: cannot write output: {e}");
            EXIT_COMPUTE
        }
    }
}

fn params_of(config: &RunConfig) -> &PhysicalParams {
    config
        .params
        .as_ref()
        .expect("command resolved with physical parameters")
}

fn config_echo(config: &RunConfig) -> Map<String, Value> {
    let mut echo = Map::new();
    echo.insert("command".into(), json!(config.command.name()));
    if let Some(p) = &config.params {
        echo.insert("mass".into(), num(p.mass));
        echo.insert("coupling".into(), num(p.coupling));
        echo.insert("z0".into(), num(p.half_separation));
        echo.insert("deficit".into(), num(p.deficit));
        echo.insert(
            "radius".into(),
            if config.radius_given {
                num(p.radius)
            } else {
                Value::Null
            },
        );
        echo.insert("hbar".into(), num(p.hbar));
    }
    match &config.command {
        Command::BoundStates => {}
        Command::BesselZero { nu, m, mode } => {
            echo.insert("nu".into(), num(*nu));
            echo.insert("m".into(), json!(m));
            echo.insert("mode".into(), json!(mode.as_str()));
        }
        Command::Spectrum {
            n_max,
            m_max,
            mode,
            reference,
        } => {
            echo.insert("n-max".into(), json!(n_max));
            echo.insert("m-max".into(), json!(m_max));
            echo.insert("mode".into(), json!(mode.as_str()));
            if let Some(r) = reference {
                echo.insert("ref-n".into(), json!(r.qn_bar.n));
                echo.insert("ref-m".into(), json!(r.qn_bar.m));
            }
        }
        Command::CriticalRadius { qn, level } => {
            echo.insert("n".into(), json!(qn.n));
            echo.insert("m".into(), json!(qn.m));
            echo.insert("level".into(), json!(level.as_str()));
        }
        Command::CompareApprox {
            nu_max,
            nu_step,
            m_max,
        } => {
            echo.insert("nu-max".into(), num(*nu_max));
            echo.insert("m-max".into(), json!(m_max));
            echo.insert("nu-step".into(), num(*nu_step));
        }
        Command::EvalBessel { nu, q } => {
            echo.insert("nu".into(), num(*nu));
            echo.insert("q".into(), num(*q));
        }
    }
    echo.insert("output".into(), json!(config.output_format.as_str()));
    echo
}

/// Computes the report for `config` without writing anything.
pub fn build_report(config: &RunConfig) -> Result<Report> {
    let mut summary = Map::new();
    let table = match &config.command {
        Command::BoundStates => bound_states(params_of(config), &mut summary)?,
        Command::BesselZero { nu, m, mode } => {
            let zero = bessel_zero(*nu, *m, *mode)?;
            let residual = bessel_j(*nu, zero)?.value;
            let mut t = Table::new(&["nu", "m", "mode", "zero", "residual"]);
            t.push(vec![
                num(*nu),
                json!(m),
                json!(mode.as_str()),
                num(zero),
                num(residual),
            ]);
            t
        }
        Command::Spectrum {
            n_max,
            m_max,
            mode,
            reference,
        } => spectrum(
            params_of(config),
            *n_max,
            *m_max,
            *mode,
            *reference,
            &mut summary,
        )?,
        Command::CriticalRadius { qn, level } => {
            let p = params_of(config);
            let state = bound_state_at(p, *level)?;
            let radius = critical_radius(p, *qn, *level)?;
            let mut t = Table::new(&[
                "n",
                "m",
                "level",
                "nu",
                "mode",
                "h_factor",
                "critical_radius",
            ]);
            t.push(vec![
                json!(qn.n),
                json!(qn.m),
                json!(level.as_str()),
                num(bessel_order(qn.n, p.deficit)),
                json!(ZeroApproxMode::PaperHighOrder.as_str()),
                num(state.h_factor),
                num(radius),
            ]);
            t
        }
        Command::CompareApprox {
            nu_max,
            nu_step,
            m_max,
        } => {
            let rows = compare_zero_approximations(*nu_max, *nu_step, *m_max)?;
            let mut t = Table::new(&["nu", "m", "exact", "paper", "rel_error"]);
            let mut worst = 0.0_f64;
            for r in &rows {
                worst = worst.max(r.rel_error);
                t.push(vec![
                    num(r.nu),
                    json!(r.m),
                    num(r.exact),
                    num(r.paper),
                    num(r.rel_error),
                ]);
            }
            summary.insert("max_rel_error".into(), num(worst));
            t
        }
        Command::EvalBessel { nu, q } => {
            let eval = bessel_j(*nu, *q)?;
            let derivative = if *q > 0.0 {
                num(bessel_j_derivative(*nu, *q)?)
            } else {
                Value::Null
            };
            let mut t = Table::new(&["nu", "q", "value", "method", "term_count", "derivative"]);
            t.push(vec![
                num(*nu),
                num(*q),
                num(eval.value),
                json!(eval.method.as_str()),
                json!(eval.term_count),
                derivative,
            ]);
            t
        }
    };
    Ok(Report {
        config: config_echo(config),
        table,
        summary,
    })
}

fn state_object(p: &PhysicalParams, s: &BoundState) -> Value {
    let (small, large) = analytic_limits(p, s.level);
    json!({
        "level": s.level.as_str(),
        "energy": num(s.energy),
        "xi": num(s.xi),
        "h_factor": num(s.h_factor),
        "limit_small_z0": num(small),
        "limit_large_z0": num(large),
    })
}

fn bound_states(p: &PhysicalParams, summary: &mut Map<String, Value>) -> Result<Table> {
    let ground = ground_state(p)?;
    let excited = excited_state(p)?;
    let mut t = Table::new(&[
        "level",
        "energy",
        "xi",
        "h_factor",
        "limit_small_z0",
        "limit_large_z0",
    ]);
    for s in core::iter::once(&ground).chain(excited.as_ref()) {
        let (small, large) = analytic_limits(p, s.level);
        t.push(vec![
            json!(s.level.as_str()),
            num(s.energy),
            num(s.xi),
            num(s.h_factor),
            num(small),
            num(large),
        ]);
    }
    summary.insert("strength".into(), num(coupling_strength_parameter(p)));
    summary.insert("ground".into(), state_object(p, &ground));
    summary.insert(
        "excited".into(),
        excited.as_ref().map_or(Value::Null, |s| state_object(p, s)),
    );
    summary.insert(
        "splitting".into(),
        level_splitting(p)?.map_or(Value::Null, num),
    );
    Ok(t)
}

fn spectrum(
    p: &PhysicalParams,
    n_max: u32,
    m_max: u32,
    mode: ZeroApproxMode,
    reference: Option<ReferenceState>,
    summary: &mut Map<String, Value>,
) -> Result<Table> {
    let params = match reference {
        Some(r) => p.with_radius(critical_radius(p, r.qn_bar, EnergyLevel::Ground)?),
        None => *p,
    };
    summary.insert("radius".into(), num(params.radius));

    let mut columns = vec![
        "n",
        "m",
        "level",
        "nu",
        "mode",
        "radial_energy",
        "z_energy",
        "total_energy",
        "classification",
    ];
    if reference.is_some() {
        columns.push("index_class");
    }
    let mut t = Table::new(&columns);
    for e in spectrum_table(&params, n_max, m_max, mode)? {
        let mut row = vec![
            json!(e.qn.n),
            json!(e.qn.m),
            json!(e.level.as_str()),
            num(e.nu),
            json!(e.mode.as_str()),
            num(e.radial_energy),
            num(e.z_energy),
            num(e.total_energy),
            json!(e.classification.as_str()),
        ];
        if let Some(r) = reference {
            let class = classify(&params, r, QuantumNumbers::new(e.qn.n, e.qn.m), e.level)?;
            row.push(json!(class.as_str()));
        }
        t.push(row);
    }
    Ok(t)
}
