//! Subcommand dispatch: load the group, compute the full report, render it.
//! Nothing is printed from here; the caller owns the write and the exit code.

use std::fs;
use std::path::PathBuf;

use pscbound::{
    bound_report, bound_report_from_class_data, collapse_expansion, fundamental_class_expansion,
    generate_class_data, homology_dim, homology_from_class_data, normalize_with_cap,
    parse_class_data, parse_group_expr, run_all_suites, surjectivity_report, verify_expansion_equality,
    write_class_data, BcStatus, BoundReport, ClassDataFile, NormalForm,
};

use crate::config::{
    resolve_element_cap, parse_dims, Cli, ClassdataArgs, Command, ComputeArgs, GroupSource,
    HomologyArgs, MattheyArgs, VerifyArgs,
};
use crate::output::{
    render_compute, render_homology, render_matthey, render_verify, ComputeReport, HomologyReport,
    MattheyReport, VerifyReport,
};

pub enum Outcome {
    Success,
    VerifyFailed,
}

pub struct RunOutput {
    pub text: String,
    pub outcome: Outcome,
    pub dest: Option<PathBuf>,
}

pub enum CliError {
    /// Bad flags or flag values: exit code 1.
    Usage(String),
    /// The computation itself rejected the input: exit code 2.
    Lib(pscbound::Error),
    /// Filesystem trouble around an otherwise fine computation: exit code 2.
    Io(String),
}

impl From<pscbound::Error> for CliError {
    fn from(e: pscbound::Error) -> CliError {
        CliError::Lib(e)
    }
}

enum LoadedGroup {
    Expr { label: String, nf: NormalForm },
    File { label: String, cdf: ClassDataFile },
}

fn load_group(source: &GroupSource, cap: usize) -> Result<LoadedGroup, CliError> {
    if let Some(text) = &source.group {
        let expr = parse_group_expr(text)?;
        let nf = normalize_with_cap(&expr, cap)?;
        Ok(LoadedGroup::Expr {
            label: expr.to_string(),
            nf,
        })
    } else {
        let path = source
            .class_data
            .as_ref()
            .expect("flag parser guarantees a group source");
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        let cdf = parse_class_data(&text)?;
        let label = cdf
            .group
            .clone()
            .unwrap_or_else(|| format!("class data {}", path.display()));
        Ok(LoadedGroup::File { label, cdf })
    }
}

pub fn execute(cli: Cli) -> Result<RunOutput, CliError> {
    match cli.command {
        Command::Compute(args) => compute(args),
        Command::Homology(args) => homology(args),
        Command::Matthey(args) => matthey(args),
        Command::Verify(args) => verify(args),
        Command::Classdata(args) => classdata(args),
    }
}

fn compute(args: ComputeArgs) -> Result<RunOutput, CliError> {
    let (lo, hi) = parse_dims(&args.dims).map_err(CliError::Usage)?;
    let cap = resolve_element_cap(args.element_cap).map_err(CliError::Usage)?;
    let bc: BcStatus = args.bc_status.into();
    let loaded = load_group(&args.source, cap)?;

    // Bound data is 4-periodic in n, so compute one report per residue and
    // restamp n on the rest; only the surjectivity text depends on n itself.
    let mut by_residue: [Option<BoundReport>; 4] = [None, None, None, None];
    let mut rows = Vec::new();
    let mut surjectivity: Option<Vec<String>> = None;
    for n in lo..=hi {
        let residue = (n % 4) as usize;
        let row = match &by_residue[residue] {
            Some(base) => {
                let mut row = base.clone();
                row.n = n;
                row
            }
            None => {
                let row = match &loaded {
                    LoadedGroup::Expr { nf, .. } => bound_report(nf, n)?,
                    LoadedGroup::File { cdf, .. } => bound_report_from_class_data(cdf, n)?,
                };
                by_residue[residue] = Some(row.clone());
                row
            }
        };
        rows.push(row);
        if let LoadedGroup::Expr { nf, .. } = &loaded {
            surjectivity
                .get_or_insert_with(Vec::new)
                .push(surjectivity_report(nf, n, bc));
        }
    }

    let label = match &loaded {
        LoadedGroup::Expr { label, .. } | LoadedGroup::File { label, .. } => label.clone(),
    };
    let report = ComputeReport {
        group_label: label,
        bc_status: bc.as_str(),
        rows,
        surjectivity,
    };
    Ok(RunOutput {
        text: render_compute(&report, args.format),
        outcome: Outcome::Success,
        dest: args.output,
    })
}

fn homology(args: HomologyArgs) -> Result<RunOutput, CliError> {
    let cap = resolve_element_cap(args.element_cap).map_err(CliError::Usage)?;
    let loaded = load_group(&args.source, cap)?;

    // Rows in MODULE_LABELS order: F0, F1, F0_0.
    let slots: [(u8, bool); 3] = [(0, false), (1, false), (0, true)];
    let mut grid = [[0u64; 3]; 3];
    for (row, &(q, zai)) in slots.iter().enumerate() {
        for (p, cell) in grid[row].iter_mut().enumerate() {
            *cell = match &loaded {
                LoadedGroup::Expr { nf, .. } => homology_dim(nf, p as u8, q, zai)?,
                LoadedGroup::File { cdf, .. } => homology_from_class_data(cdf, p as u8, q, zai)?,
            };
        }
    }

    let label = match &loaded {
        LoadedGroup::Expr { label, .. } | LoadedGroup::File { label, .. } => label.clone(),
    };
    let report = HomologyReport {
        group_label: label,
        grid,
    };
    Ok(RunOutput {
        text: render_homology(&report, args.format),
        outcome: Outcome::Success,
        dest: args.output,
    })
}

fn matthey(args: MattheyArgs) -> Result<RunOutput, CliError> {
    let raw = fundamental_class_expansion(args.p, args.m, args.q)?;
    let collapsed = collapse_expansion(&raw);
    let verified = verify_expansion_equality(&raw, &collapsed);
    let report = MattheyReport {
        raw,
        collapsed,
        verified,
    };
    Ok(RunOutput {
        text: render_matthey(&report, args.format),
        outcome: if verified {
            Outcome::Success
        } else {
            Outcome::VerifyFailed
        },
        dest: args.output,
    })
}

fn verify(args: VerifyArgs) -> Result<RunOutput, CliError> {
    let suites = run_all_suites(args.max_modulus)?;
    let ok = suites.iter().all(|s| s.all_passed());
    let report = VerifyReport {
        max_modulus: args.max_modulus,
        suites,
        ok,
    };
    Ok(RunOutput {
        text: render_verify(&report, args.format),
        outcome: if ok {
            Outcome::Success
        } else {
            Outcome::VerifyFailed
        },
        dest: args.output,
    })
}

fn classdata(args: ClassdataArgs) -> Result<RunOutput, CliError> {
    let cap = resolve_element_cap(args.element_cap).map_err(CliError::Usage)?;
    let expr = parse_group_expr(&args.group)?;
    let cdf = generate_class_data(&expr, cap)?;
    Ok(RunOutput {
        text: write_class_data(&cdf),
        outcome: Outcome::Success,
        dest: args.output,
    })
}
