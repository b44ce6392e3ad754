use num_rational::BigRational;
use oddzeta::acceptance;
use oddzeta::asymptotics::{
    convergence_probe, optimize_r, scaled_limit_probe, solve_saddle, SaddleProblem,
};
use oddzeta::aux_function::AuxParams;
use oddzeta::elimination::{certify, weight_sweep};
use oddzeta::exact_arith::highprec::Precision;
use oddzeta::linear_forms::{linear_form_for, verify_identity, verify_integrality};
use oddzeta::totient_sets::{
    build_denominator_set, build_zero_set, density_report, factor_a1, factor_a2, period,
    DenominatorSet,
};
use serde_json::json;

use crate::config::{Cli, Command, Format, ProbeKind, RunConfig};
use crate::output::{write_csv, write_json, Failure};

pub fn run(cli: &Cli) -> Result<(), Failure> {
    let cmd = &cli.command;
    let config = &cli.config;
    if config.digits < 10 {
        return Err(Failure::config("--digits must be at least 10"));
    }
    let csv_ok = matches!(cmd, Command::Aux | Command::Probe { .. });
    if config.format == Format::Csv && !csv_ok {
        return Err(Failure::config("CSV output is only available for `aux` and `probe`"));
    }
    match *cmd {
        Command::Sets => sets(cmd, config),
        Command::Aux => aux(cmd, config),
        Command::Forms => forms(cmd, config),
        Command::Saddle => saddle(cmd, config),
        Command::Constants => {
            let c = optimize_r(prec(config));
            write_json(cmd, config, c.summary(config.digits))
        }
        Command::Probe { kind } => probe(cmd, kind, config),
        Command::Certify => {
            let cert = certify(&config.r()?, config.s, &config.bound()?, prec(config))?;
            write_json(cmd, config, cert)
        }
        Command::Selftest => selftest(cmd, config),
    }
}

fn prec(config: &RunConfig) -> Precision {
    Precision::new(config.digits)
}

fn den_r(r: &BigRational) -> Result<u64, Failure> {
    u64::try_from(r.denom()).map_err(|_| Failure::config("den(r) does not fit in 64 bits"))
}

fn psi(config: &RunConfig) -> Result<DenominatorSet, Failure> {
    Ok(build_denominator_set(&config.bound()?)?)
}

/// `(r, s, B, n)` with `n = n_mult · P`.
fn params(config: &RunConfig, n_mult: u64) -> Result<AuxParams, Failure> {
    let r = config.r()?;
    let p = period(&psi(config)?, den_r(&r)?)
        .to_u64()
        .ok_or_else(|| Failure::config("the period P does not fit in 64 bits"))?;
    let n = p
        .checked_mul(n_mult)
        .ok_or_else(|| Failure::config("n = n_mult·P overflows"))?;
    Ok(AuxParams::new(r, config.s_u32()?, config.bound()?, n)?)
}

fn sets(cmd: &Command, config: &RunConfig) -> Result<(), Failure> {
    let r = config.r()?;
    let psi = psi(config)?;
    let zero_set = build_zero_set(&psi);
    let b = config.bound()?;
    let result = json!({
        "B": format!("{}/{}", b.numer(), b.denom()),
        "psi": psi.members(),
        "zero_set_size": zero_set.len(),
        "period": period(&psi, den_r(&r)?).value.to_string(),
        "A1_factored": factor_a1(&psi, &r),
        "A2_factored": factor_a2(&psi, &r),
    });
    write_json(cmd, config, result)
}

fn aux(cmd: &Command, config: &RunConfig) -> Result<(), Failure> {
    let (aux, pf, _) = linear_form_for(params(config, config.n_mult)?)?;
    let rows = pf.entries();
    match config.format {
        Format::Csv => write_csv(
            config,
            &["i", "k", "a"],
            rows.into_iter()
                .map(|e| vec![e.i.to_string(), e.k.to_string(), e.a])
                .collect(),
        ),
        Format::Json => write_json(
            cmd,
            config,
            json!({
                "n": pf.n(),
                "degree": aux.degree(),
                "gates": aux.setting().gates.summary(),
                "coefficients": rows,
            }),
        ),
    }
}

fn forms(cmd: &Command, config: &RunConfig) -> Result<(), Failure> {
    let (aux, _, lf) = linear_form_for(params(config, config.n_mult)?)?;
    let integrality = verify_integrality(&lf);
    let mut identity = Vec::new();
    for &theta in aux.zero_set().fractions() {
        identity.push(verify_identity(&lf, &aux, theta, config.trunc, prec(config))?);
    }
    let identity_ok = identity.iter().all(|c| c.pass);
    let result = json!({
        "n": lf.n,
        "rho_i": lf.rho_strings(),
        "rho_0_theta": lf.rho0_strings(),
        "integrality": {
            "pass": integrality.all_pass,
            "entries": integrality.entries,
        },
        "identity_residuals": identity.iter().map(|c| c.summary(config.digits)).collect::<Vec<_>>(),
    });
    write_json(cmd, config, result)?;
    if !integrality.all_pass {
        return Err(Failure::assertion("integrality check failed"));
    }
    if !identity_ok {
        return Err(Failure::assertion("series identity check failed"));
    }
    Ok(())
}

fn saddle(cmd: &Command, config: &RunConfig) -> Result<(), Failure> {
    let psi = psi(config)?;
    let sp = SaddleProblem::new(config.r()?, config.s, &psi)?;
    let sol = solve_saddle(&sp, prec(config))?;
    let result = json!({
        "psi_size": psi.len(),
        "zero_set_size": sp.zero_set_size,
        "x0_bound": sp.x0_bound().to_string(),
        "solution": sol.summary(config.digits),
    });
    write_json(cmd, config, result)
}

fn probe(cmd: &Command, kind: ProbeKind, config: &RunConfig) -> Result<(), Failure> {
    let csv = config.format == Format::Csv;
    match kind {
        ProbeKind::Density => {
            let rows = density_report(&config.sweep(&[1_000u64, 10_000, 100_000])?)?;
            if csv {
                let rows = rows
                    .iter()
                    .map(|r| vec![r.bound.to_string(), r.size.to_string(), format!("{:.12}", r.ratio)])
                    .collect();
                return write_csv(config, &["B", "psi_size", "ratio"], rows);
            }
            write_json(cmd, config, rows)
        }
        ProbeKind::Scaled => {
            let s_list = config.sweep(&[1001u64, 10_001, 100_001])?;
            let c = BigRational::from_integer(1.into());
            let rows = scaled_limit_probe(&config.r()?, &c, &s_list, prec(config))?;
            if csv {
                let rows = rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.s.to_string(),
                            format!("{:.6}", r.bound),
                            r.psi_size.to_string(),
                            r.zero_set_size.to_string(),
                            format!("{:.12}", r.root),
                            format!("{:.12}", r.target),
                            format!("{:.12}", r.relative_error),
                        ]
                    })
                    .collect();
                let header = ["s", "B", "psi_size", "zero_set_size", "root", "target", "relative_error"];
                return write_csv(config, &header, rows);
            }
            write_json(cmd, config, rows)
        }
        ProbeKind::Convergence => {
            let mults = config.sweep(&[1u64, 2, 4, 8])?;
            let mut ns = Vec::new();
            for m in mults {
                ns.push(params(config, m)?.n);
            }
            let rep = convergence_probe(
                &config.r()?,
                config.s_u32()?,
                &config.bound()?,
                &ns,
                config.trunc,
                prec(config),
            )?;
            if csv {
                let thetas: Vec<String> = rep
                    .rows
                    .first()
                    .map(|r| r.ratios.keys().cloned().collect())
                    .unwrap_or_default();
                let mut header = vec!["n".to_string(), "r_n1".into(), "log_r_over_n".into(), "gap".into()];
                header.extend(thetas.iter().map(|t| format!("ratio_{t}")));
                let rows = rep
                    .rows
                    .iter()
                    .map(|r| {
                        let mut row = vec![
                            r.n.to_string(),
                            r.r_n1.clone(),
                            format!("{:.12}", r.log_r_over_n),
                            format!("{:.12}", r.gap),
                        ];
                        row.extend(thetas.iter().map(|t| format!("{:.12}", r.ratios[t])));
                        row
                    })
                    .collect();
                let header: Vec<&str> = header.iter().map(String::as_str).collect();
                return write_csv(config, &header, rows);
            }
            write_json(cmd, config, rep)
        }
        ProbeKind::Weights => {
            let rep = weight_sweep(&psi(config)?, config.s_u32()?, 50, config.seed)?;
            if csv {
                let row = vec![
                    rep.trials.to_string(),
                    rep.orthogonal.to_string(),
                    rep.nonvanishing.to_string(),
                    rep.all_pass.to_string(),
                ];
                return write_csv(config, &["trials", "orthogonal", "nonvanishing", "all_pass"], vec![row]);
            }
            write_json(cmd, config, rep)
        }
    }
}

fn selftest(cmd: &Command, config: &RunConfig) -> Result<(), Failure> {
    let results = acceptance::run_all();
    for r in &results {
        eprintln!("{}", r.report_line());
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.pass()).map(|r| r.id).collect();
    write_json(cmd, config, &results)?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::assertion(format!("acceptance checks failed: {failed:?}")))
    }
}
