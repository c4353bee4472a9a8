//! Figure panels: parameter sweeps of solution curves and radius sequences.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;

use super::{parse_list_opt, parse_opt, short, threads_from_env, FiguresArgs, Outcome, DEFAULT_SOLUTION_TERMS};
use crate::format::{fmt_f64, write_atomic, CsvTable, Series, SvgPlot};
use crate::radius::DEFAULT_RADIUS_TERMS;
use crate::series::{uniform_grid, DEFAULT_TAIL_TOL};
use crate::{compute_coefficients, radius_sequence, Error, ProblemSpec, Result, SeriesSolution};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PanelKind {
    /// `u(t)` curves on a common grid.
    Solution,
    /// `r_n` sequences.
    Radius,
}

/// Parameter lists whose Cartesian product gives the curves of a panel.
#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub betas: Vec<f64>,
    pub ps: Vec<usize>,
    pub u0s: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Panel {
    pub name: &'static str,
    pub kind: PanelKind,
    /// `a₀ = a₁ = sign`
    pub sign: f64,
    pub sweep: Sweep,
}

const U0S: [f64; 4] = [1.0 / 2.0, 1.0 / 3.0, 1.0 / 4.0, 1.0 / 5.0];
const BETAS: [f64; 4] = [1.0, 1.0 / 2.0, 1.0 / 3.0, 1.0 / 4.0];

const PANELS: [&str; 14] = [
    "f1-left", "f1-right", "f2-left", "f2-right", "f3-left", "f3-right", "f4-left", "f4-right", "f5-left",
    "f5-right", "f6-left", "f6-right", "f7-left", "f7-right",
];

pub fn panel_names() -> &'static [&'static str] {
    &PANELS
}

/// Looks up a panel by name.
pub fn panel(name: &str) -> Option<Panel> {
    use PanelKind::{Radius, Solution};
    let sweep = |betas: &[f64], ps: &[usize], u0s: &[f64]| Sweep {
        betas: betas.to_vec(),
        ps: ps.to_vec(),
        u0s: u0s.to_vec(),
    };
    let (name, kind, sign, sweep) = match name {
        "f1-left" => ("f1-left", Solution, -1.0, sweep(&[0.5], &[1], &U0S)),
        "f1-right" => ("f1-right", Solution, -1.0, sweep(&[0.5], &[1, 2, 3], &[0.5])),
        "f2-left" => ("f2-left", Solution, -1.0, sweep(&BETAS, &[1], &[0.5])),
        "f2-right" => ("f2-right", Solution, 1.0, sweep(&BETAS, &[1], &[0.5])),
        "f3-left" => ("f3-left", Solution, -1.0, sweep(&[0.5], &[1], &U0S)),
        "f3-right" => ("f3-right", Solution, 1.0, sweep(&[0.5], &[1], &U0S)),
        "f4-left" => ("f4-left", Solution, -1.0, sweep(&[0.5], &[1, 2, 3], &[0.5])),
        "f4-right" => ("f4-right", Solution, 1.0, sweep(&[0.5], &[1, 2, 3], &[0.5])),
        "f5-left" => ("f5-left", Solution, 1.0, sweep(&[0.5], &[1, 2], &U0S)),
        "f5-right" => ("f5-right", Solution, -1.0, sweep(&[0.5], &[1, 2], &U0S)),
        "f6-left" => ("f6-left", Radius, -1.0, sweep(&[0.5], &[1, 2, 3], &[1.0 / 3.0])),
        "f6-right" => ("f6-right", Radius, 1.0, sweep(&[0.5], &[1, 2, 3], &[1.0 / 3.0])),
        "f7-left" => ("f7-left", Radius, -1.0, sweep(&BETAS, &[1], &[1.0 / 3.0])),
        "f7-right" => ("f7-right", Radius, 1.0, sweep(&BETAS, &[1], &[1.0 / 3.0])),
        _ => return None,
    };
    Some(Panel { name, kind, sign, sweep })
}

impl Panel {
    /// Curves as `(label, spec)`, ordered so that later curves have larger
    /// parameter values.
    pub fn curves(&self) -> Result<Vec<(String, ProblemSpec)>> {
        let mut betas = self.sweep.betas.clone();
        let mut ps = self.sweep.ps.clone();
        let mut u0s = self.sweep.u0s.clone();
        betas.sort_by(f64::total_cmp);
        ps.sort_unstable();
        u0s.sort_by(f64::total_cmp);
        let mut out = Vec::new();
        for &p in &ps {
            for &beta in &betas {
                for &u0 in &u0s {
                    let mut parts = Vec::new();
                    if betas.len() > 1 {
                        parts.push(format!("beta={}", short(beta)));
                    }
                    if ps.len() > 1 {
                        parts.push(format!("p={p}"));
                    }
                    if u0s.len() > 1 || parts.is_empty() {
                        parts.push(format!("u0={}", short(u0)));
                    }
                    let spec = ProblemSpec::new(beta, self.sign, self.sign, p, u0)?;
                    out.push((parts.join(" "), spec));
                }
            }
        }
        Ok(out)
    }

    fn title(&self) -> String {
        let eq = if self.sign < 0.0 { "D^b u = u - u^(p+1)" } else { "D^b u = -u + u^(p+1)" };
        format!("{}: {eq}", self.name)
    }
}

/// Computes one panel. Returns the CSV table and the plotted series.
pub fn write_panel(
    panel: &Panel,
    n_terms: Option<usize>,
    samples: usize,
    t_max: Option<f64>,
) -> Result<(CsvTable, Vec<Series>)> {
    let curves = panel.curves()?;
    match panel.kind {
        PanelKind::Solution => {
            let n = n_terms.unwrap_or(DEFAULT_SOLUTION_TERMS);
            let sols = curves
                .par_iter()
                .map(|(_, spec)| Ok(SeriesSolution::from_table(&compute_coefficients(spec, n)?)))
                .collect::<Result<Vec<_>>>()?;
            let t_max = match t_max {
                Some(t) => t,
                None => {
                    let t = sols.iter().map(|s| s.safe_t_max(DEFAULT_TAIL_TOL)).fold(f64::INFINITY, f64::min);
                    if t.is_finite() {
                        t
                    } else {
                        1.0
                    }
                }
            };
            let grid = uniform_grid(t_max, samples);
            let columns = sols.iter().map(|s| s.evaluate_grid(&grid)).collect::<Result<Vec<_>>>()?;
            let mut csv = CsvTable::new(std::iter::once("t".to_string()).chain(curves.iter().map(|c| c.0.clone())));
            for (i, &t) in grid.iter().enumerate() {
                let mut row = vec![t];
                row.extend(columns.iter().map(|c| c[i]));
                csv.push_numbers(&row);
            }
            let series = curves
                .iter()
                .zip(columns)
                .map(|((label, _), col)| Series { label: label.clone(), points: grid.iter().copied().zip(col).collect() })
                .collect();
            Ok((csv, series))
        }
        PanelKind::Radius => {
            let n = n_terms.unwrap_or(DEFAULT_RADIUS_TERMS);
            let seqs = curves
                .par_iter()
                .map(|(_, spec)| {
                    let table = compute_coefficients(spec, n)?;
                    let limit = table.valid_len().saturating_sub(1).min(n);
                    radius_sequence(&table, limit)
                })
                .collect::<Result<Vec<_>>>()?;
            let mut csv = CsvTable::new(std::iter::once("n".to_string()).chain(curves.iter().map(|c| c.0.clone())));
            for k in 1..=n {
                let mut row = vec![k.to_string()];
                for s in &seqs {
                    let cell = s.entries.iter().find(|e| e.0 == k).map(|e| fmt_f64(e.1)).unwrap_or_default();
                    row.push(cell);
                }
                csv.rows.push(row);
            }
            for ((label, _), s) in curves.iter().zip(&seqs) {
                csv.trailer.push(format!("tail_summary {label}={}", fmt_f64(s.tail_summary)));
            }
            let series = curves
                .iter()
                .zip(&seqs)
                .map(|((label, _), s)| Series {
                    label: label.clone(),
                    points: s.entries.iter().map(|&(n, r)| (n as f64, r)).collect(),
                })
                .collect();
            Ok((csv, series))
        }
    }
}

pub(super) fn run(a: &FiguresArgs, stdout: &mut dyn Write) -> Result<Outcome> {
    let names: Vec<&str> = if a.panel == "all" {
        PANELS.to_vec()
    } else {
        a.panel.split(',').map(str::trim).collect()
    };
    let betas = parse_list_opt(&a.betas)?;
    let u0s = parse_list_opt(&a.u0s)?;
    let ps = parse_list_opt(&a.ps)?
        .map(|v| {
            v.into_iter()
                .map(|p| {
                    if p >= 1.0 && p.fract() == 0.0 {
                        Ok(p as usize)
                    } else {
                        Err(Error::InvalidSpec(format!("p = {p} is not a positive integer")))
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    let t_max = parse_opt(&a.t_max)?;

    let mut panels = Vec::new();
    for name in names {
        let mut p = panel(name).ok_or_else(|| Error::InvalidSpec(format!("unknown panel {name:?}")))?;
        if let Some(b) = &betas {
            p.sweep.betas = b.clone();
        }
        if let Some(u) = &u0s {
            p.sweep.u0s = u.clone();
        }
        if let Some(v) = &ps {
            p.sweep.ps = v.clone();
        }
        panels.push(p);
    }

    let work = || -> Result<Vec<(Panel, CsvTable, Vec<Series>)>> {
        panels
            .par_iter()
            .map(|p| {
                let (csv, series) = write_panel(p, a.n_terms, a.samples, t_max)?;
                Ok((p.clone(), csv, series))
            })
            .collect()
    };
    let results = match threads_from_env() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Io(std::io::Error::other(e)))?
            .install(work)?,
        None => work()?,
    };

    for (p, csv, series) in results {
        let path = a.out.join(format!("{}.csv", p.name));
        write_atomic(&path, &csv.render())?;
        writeln!(stdout, "{}", path.display())?;
        if let Some(dir) = &a.svg {
            write_svg(dir, &p, series)?;
        }
    }
    Ok(Outcome::Done)
}

fn write_svg(dir: &Path, p: &Panel, series: Vec<Series>) -> Result<()> {
    let (x_label, y_label) = match p.kind {
        PanelKind::Solution => ("t", "u(t)"),
        PanelKind::Radius => ("n", "r_n"),
    };
    let plot = SvgPlot { title: p.title(), x_label: x_label.into(), y_label: y_label.into(), series };
    write_atomic(&dir.join(format!("{}.svg", p.name)), &plot.render())
}
