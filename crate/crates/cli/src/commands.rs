use std::fmt;
use std::str::FromStr;

use kisces_core::households::{
    aggregate_mpc, budget_residual, euler_residual, mpc_closed_form, mpc_oracle, wa_steady_state,
};
use kisces_core::multipliers::{
    consumption_multiplier, investment_multiplier, regime_kappa, MultiplierInputs,
};
use kisces_core::policy::{is_zlb, taylor_rate};
use kisces_core::production::{
    cross_partial_k_kp, cross_partial_l_kp, factor_shares, marginal_products, output,
};
use kisces_core::scenario::{
    builtin_description, builtin_scenarios, run_scenarios, simulate_path, ChannelDecomposition,
    PathInputs, ScenarioImpulse, ScenarioResult,
};
use kisces_core::ModelError;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde_json::Value;
use thiserror::Error;

use crate::config::{ConfigError, LoadedConfig, RunConfig};
use crate::report::{col, Cell, Column, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Table1,
    Scenario,
    Multiplier,
    Mpc,
    Production,
    Path,
}

impl Command {
    pub const ALL: [Command; 6] = [
        Command::Table1,
        Command::Scenario,
        Command::Multiplier,
        Command::Mpc,
        Command::Production,
        Command::Path,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Table1 => "table1",
            Command::Scenario => "scenario",
            Command::Multiplier => "multiplier",
            Command::Mpc => "mpc",
            Command::Production => "production",
            Command::Path => "path",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CliError::UnknownCommand(s.to_string()))
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{command}: {source}")]
    Model {
        command: Command,
        #[source]
        source: ModelError,
    },
    #[error("unknown command `{0}`")]
    UnknownCommand(String),
    #[error("{0}")]
    Format(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for configuration and usage problems, 3 for numerical
    /// non-convergence, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::UnknownCommand(_) => 2,
            CliError::Model { source, .. } if source.is_convergence() => 3,
            _ => 1,
        }
    }
}

fn model(command: Command) -> impl Fn(ModelError) -> CliError {
    move |source| CliError::Model { command, source }
}

pub fn run_command(command: Command, loaded: &LoadedConfig) -> Result<Report, CliError> {
    let cfg = &loaded.config;
    let mut report = match command {
        Command::Table1 => table_report(command, &builtin_scenarios(), cfg),
        Command::Scenario => table_report(command, &cfg.scenario_list(), cfg),
        Command::Multiplier => multiplier_report(cfg)?,
        Command::Mpc => mpc_report(cfg)?,
        Command::Production => production_report(cfg),
        Command::Path => path_report(cfg)?,
    };

    let used = sections(command);
    let defaulted: Vec<&str> = used
        .iter()
        .copied()
        .filter(|s| loaded.is_defaulted(s))
        .collect();
    let provenance = if defaulted.is_empty() {
        "calibration: all sections supplied by the config".to_string()
    } else {
        format!("calibration: defaulted sections: {}", defaulted.join(", "))
    };
    report.notes.insert(0, provenance);

    let raw = serde_json::to_value(cfg.to_raw()).expect("config serialises");
    let mut inputs = serde_json::Map::new();
    for s in used {
        let v = match *s {
            "scenarios" => cfg
                .scenarios
                .as_ref()
                .map(|_| raw[*s].clone())
                .unwrap_or_else(|| Value::String("built-in".into())),
            _ => raw[*s].clone(),
        };
        inputs.insert(s.to_string(), v);
    }
    report.inputs = Value::Object(inputs);
    Ok(report)
}

fn sections(command: Command) -> &'static [&'static str] {
    match command {
        Command::Table1 => &["elasticities"],
        Command::Scenario => &["elasticities", "scenarios"],
        Command::Multiplier => &["production", "factors", "household", "policy", "multiplier"],
        Command::Mpc => &["household", "policy"],
        Command::Production => &["production", "factors"],
        Command::Path => &["elasticities", "policy", "path", "seed"],
    }
}

const CHANNEL_COLUMNS: [Column; 4] = [
    col("channel_g_c", "m_GC·Ĝ^C"),
    col("channel_g_i", "m_GI·Ĝ^I"),
    col("channel_net_exports", "η·q̂"),
    col("channel_wealth", "−χ·B̂"),
];

fn channel_cells(d: &ChannelDecomposition) -> [Cell; 4] {
    [
        d.government_consumption.into(),
        d.government_investment.into(),
        d.net_exports.into(),
        d.wealth.into(),
    ]
}

fn table_report(command: Command, scenarios: &[ScenarioImpulse], cfg: &RunConfig) -> Report {
    let results: Vec<ScenarioResult> = run_scenarios(scenarios, &cfg.elasticities);
    let mut columns = vec![
        col("scenario", "Scenario"),
        col("strategy", "Strategy"),
        col("g_c_hat", "Ĝ^C"),
        col("g_i_hat", "Ĝ^I"),
        col("q_hat", "q̂"),
        col("b_hat", "B̂"),
        col("y_hat", "Ŷ"),
    ];
    columns.extend(CHANNEL_COLUMNS);

    let rows = scenarios
        .iter()
        .zip(&results)
        .map(|(s, r)| {
            let mut row: Vec<Cell> = vec![
                s.label().into(),
                builtin_description(s.label()).unwrap_or("").into(),
                s.g_c_hat().into(),
                s.g_i_hat().into(),
                s.q_hat().into(),
                s.b_hat().into(),
                r.y_hat.into(),
            ];
            row.extend(channel_cells(&r.decomposition));
            row
        })
        .collect();

    let mut notes: Vec<String> = scenarios.iter().flat_map(|s| s.warnings()).collect();
    notes.push("Ŷ is the one-period output log-deviation; negative values are recessions".into());
    Report {
        command: command.name().into(),
        title: match command {
            Command::Table1 => "One-period output effects of the stabilisation strategies".into(),
            _ => "Scenario output effects".into(),
        },
        columns,
        rows,
        notes,
        inputs: Value::Null,
    }
}

fn wa_mpc(cfg: &RunConfig, command: Command) -> Result<f64, CliError> {
    let h = &cfg.household;
    if h.phi() == 0.0 {
        return Ok(0.0);
    }
    let y = cfg.policy.y_pot();
    let r = cfg.policy.rho_eq();
    let ss = wa_steady_state(y, r, h).map_err(model(command))?;
    mpc_closed_form(&ss, r, h).map_err(model(command))
}

fn multiplier_report(cfg: &RunConfig) -> Result<Report, CliError> {
    let cmd = Command::Multiplier;
    let m = &cfg.multiplier;
    let mpc_wa = wa_mpc(cfg, cmd)?;
    let mpc_agg = aggregate_mpc(mpc_wa, &cfg.household).map_err(model(cmd))?;
    let mpk_p = marginal_products(&cfg.factors, &cfg.production).kp;

    let columns = vec![
        col("regime", "Regime"),
        col("pi", "π"),
        col("expected_inflation", "E[π]"),
        col("output", "Y"),
        col("policy_rate", "i"),
        col("at_zlb", "ZLB"),
        col("kappa", "κ"),
        col("mpc_agg", "MPC_agg"),
        col("mpi", "MPI"),
        col("mpk_p", "MPK_P"),
        col("m_gc", "m_GC"),
        col("m_gi", "m_GI"),
    ];
    let mut rows = Vec::new();
    let mut m_gi = Vec::new();
    for (name, st) in [("slump", &m.slump), ("normal", &m.normal)] {
        let zlb = is_zlb(st.pi, st.y, &cfg.policy).map_err(model(cmd))?;
        let rate = taylor_rate(st.pi, st.y, &cfg.policy).map_err(model(cmd))?;
        let kappa = regime_kappa(st.pi, st.expected_inflation, st.y, &cfg.policy, m.b_slope)
            .map_err(model(cmd))?;
        let inputs = MultiplierInputs::new(mpc_agg, m.mpi, mpk_p, kappa).map_err(model(cmd))?;
        let gc = consumption_multiplier(&inputs).map_err(model(cmd))?;
        let gi = investment_multiplier(&inputs).map_err(model(cmd))?;
        m_gi.push(gi);
        rows.push(vec![
            name.into(),
            st.pi.into(),
            st.expected_inflation.into(),
            st.y.into(),
            rate.into(),
            zlb.into(),
            kappa.into(),
            mpc_agg.into(),
            m.mpi.into(),
            mpk_p.into(),
            gc.into(),
            gi.into(),
        ]);
    }
    let mut notes = vec![
        "MPC_agg uses disposable-income MPCs: lambda LC households plus the WA closed-form MPC at y = y_pot, r = rho_eq".into(),
        "MPK_P is the CES marginal product of public capital at the configured factors".into(),
    ];
    if m_gi[0] >= m_gi[1] {
        notes.push("slump multiplier >= normal multiplier".into());
    }
    Ok(Report {
        command: cmd.name().into(),
        title: "Fiscal multipliers by monetary regime".into(),
        columns,
        rows,
        notes,
        inputs: Value::Null,
    })
}

fn mpc_report(cfg: &RunConfig) -> Result<Report, CliError> {
    let cmd = Command::Mpc;
    let h = &cfg.household;
    let y = cfg.policy.y_pot();
    let r = cfg.policy.rho_eq();
    let columns = vec![
        col("income", "Y^WA"),
        col("real_rate", "r"),
        col("assets", "A"),
        col("consumption", "C^WA"),
        col("mpc_wa", "MPC^WA"),
        col("mpc_wa_oracle", "MPC^WA (re-solved)"),
        col("lambda", "λ"),
        col("mpc_agg", "MPC_agg"),
        col("euler_residual", "Euler residual"),
        col("budget_residual", "Budget residual"),
    ];
    let mut notes = Vec::new();
    let row = if h.phi() == 0.0 {
        notes.push(
            "phi = 0: limit case; the WA MPC is exactly 0 and the steady state is indeterminate"
                .into(),
        );
        let agg = aggregate_mpc(0.0, h).map_err(model(cmd))?;
        vec![
            y.into(),
            r.into(),
            Cell::Missing,
            Cell::Missing,
            0.0.into(),
            Cell::Missing,
            h.lambda().into(),
            agg.into(),
            Cell::Missing,
            Cell::Missing,
        ]
    } else {
        let ss = wa_steady_state(y, r, h).map_err(model(cmd))?;
        let e_term = h.marginal_utility(ss.consumption);
        let closed = mpc_closed_form(&ss, r, h).map_err(model(cmd))?;
        let oracle = mpc_oracle(y, r, h, 1e-6 * y).map_err(model(cmd))?;
        let agg = aggregate_mpc(closed, h).map_err(model(cmd))?;
        notes.push("re-solved MPC holds expectations and beginning-of-period assets at the steady state (central difference, h = 1e-6 y)".into());
        vec![
            y.into(),
            r.into(),
            ss.assets.into(),
            ss.consumption.into(),
            closed.into(),
            oracle.into(),
            h.lambda().into(),
            agg.into(),
            euler_residual(&ss, r, e_term, h)
                .map_err(model(cmd))?
                .into(),
            budget_residual(&ss, r).into(),
        ]
    };
    Ok(Report {
        command: cmd.name().into(),
        title: "Marginal propensity to consume".into(),
        columns,
        rows: vec![row],
        notes,
        inputs: Value::Null,
    })
}

fn production_report(cfg: &RunConfig) -> Report {
    let f = &cfg.factors;
    let p = &cfg.production;
    let mp = marginal_products(f, p);
    let s = factor_shares(f, p);
    let columns = vec![
        col("k", "K"),
        col("l", "L"),
        col("kp", "K^P"),
        col("output", "Y"),
        col("mpk", "MPK"),
        col("mpl", "MPL"),
        col("mpk_p", "MPK_P"),
        col("share_k", "s_K"),
        col("share_l", "s_L"),
        col("share_p", "s_P"),
        col("cross_k_kp", "∂²Y/∂K∂K^P"),
        col("cross_l_kp", "∂²Y/∂L∂K^P"),
    ];
    let row = vec![
        f.k().into(),
        f.l().into(),
        f.kp().into(),
        output(f, p).into(),
        mp.k.into(),
        mp.l.into(),
        mp.kp.into(),
        s.k.into(),
        s.l.into(),
        s.p.into(),
        cross_partial_k_kp(f, p).into(),
        cross_partial_l_kp(f, p).into(),
    ];
    Report {
        command: Command::Production.name().into(),
        title: "CES production block".into(),
        columns,
        rows: vec![row],
        notes: vec![
            "public capital is not remunerated; s_P is an imputed share, excluded from distributed factor income".into(),
        ],
        inputs: Value::Null,
    }
}

/// Standard-normal sentiment innovations, reproducible from `seed`.
pub fn sentiment_innovations(seed: u64, n: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| StandardNormal.sample(&mut rng)).collect()
}

fn path_report(cfg: &RunConfig) -> Result<Report, CliError> {
    let cmd = Command::Path;
    let settings = &cfg.path;
    let inputs = PathInputs {
        plan: settings.plan.clone(),
        fiscal0: settings.fiscal0,
        kp0: settings.kp0,
        y0: settings.y0,
        pi_path: settings.pi_path.clone(),
        innovations: sentiment_innovations(cfg.seed, settings.plan.len()),
        omega0: settings.omega0,
        financing: settings.financing,
    };
    let periods = simulate_path(&inputs, &cfg.elasticities, &cfg.policy).map_err(model(cmd))?;

    let mut columns = vec![
        col("period", "t"),
        col("label", "Impulse"),
        col("y_hat", "Ŷ"),
        col("b_hat_effective", "B̂ (wealth channel)"),
    ];
    columns.extend(CHANNEL_COLUMNS);
    columns.extend([
        col("output", "Y"),
        col("public_capital", "K^P'"),
        col("debt", "B"),
        col("net_creditor", "Net creditor"),
        col("nominal_rate", "i"),
        col("real_rate", "r"),
        col("at_zlb", "ZLB"),
        col("sentiment", "Ω"),
    ]);
    let rows = periods
        .iter()
        .map(|p| {
            let chi = cfg.elasticities.chi();
            let b_eff = if chi > 0.0 {
                Cell::Number(-p.result.decomposition.wealth / chi)
            } else {
                Cell::Missing
            };
            let mut row: Vec<Cell> = vec![
                (p.period as f64).into(),
                p.result.label.clone().into(),
                p.result.y_hat.into(),
                b_eff,
            ];
            row.extend(channel_cells(&p.result.decomposition));
            row.extend([
                p.output.into(),
                p.public_capital.into(),
                p.debt.into(),
                p.net_creditor.into(),
                p.nominal_rate.into(),
                p.real_rate.into(),
                p.at_zlb.into(),
                p.sentiment.into(),
            ]);
            row
        })
        .collect();

    let mut notes: Vec<String> = vec![
        format!(
            "sentiment innovations: standard normal from seed {} (ChaCha8), scaled by sigma_omega = {}",
            cfg.seed,
            cfg.policy.sigma_omega()
        ),
        "expected inflation is next period's path value plus sentiment; the last period repeats its own value".into(),
    ];
    if periods.iter().any(|p| p.at_zlb) {
        notes.push("the zero lower bound binds in at least one period; multipliers would be at their slump values there".into());
    }
    notes.extend(settings.plan.iter().flat_map(|s| s.warnings()));
    Ok(Report {
        command: cmd.name().into(),
        title: "Multi-period policy path".into(),
        columns,
        rows,
        notes,
        inputs: Value::Null,
    })
}
