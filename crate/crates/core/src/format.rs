//! Number formatting and parsing for the CLI, CSV tables and SVG plots.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use crate::{Error, Result};

/// Shortest decimal string that parses back to the same `f64`.
///
/// Integral values print without a fractional part (`0`, `12`); very small
/// or very large magnitudes switch to exponent notation (`1e-300`).
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let a = x.abs();
    if a == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Parses a numeric CLI argument.
///
/// Accepts plain numbers and small expressions built from `+ - * /`,
/// parentheses, `sqrt(...)` and the constant `pi`, e.g. `1/3` or
/// `sqrt(1/3)`.
pub fn parse_number(src: &str) -> Result<f64> {
    let mut p = ExprParser { s: src.as_bytes(), pos: 0 };
    let v = p.expr().ok_or_else(|| Error::Parse(src.to_string()))?;
    p.skip_ws();
    if p.pos != p.s.len() || !v.is_finite() {
        return Err(Error::Parse(src.to_string()));
    }
    Ok(v)
}

/// Parses a comma-separated list of [`parse_number`] expressions.
pub fn parse_number_list(src: &str) -> Result<Vec<f64>> {
    split_top_level(src).into_iter().map(parse_number).collect()
}

// Commas inside parentheses do not separate items.
fn split_top_level(src: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in src.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&src[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&src[start..]);
    out
}

struct ExprParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Option<f64> {
        let mut v = self.term()?;
        loop {
            if self.eat(b'+') {
                v += self.term()?;
            } else if self.eat(b'-') {
                v -= self.term()?;
            } else {
                return Some(v);
            }
        }
    }

    fn term(&mut self) -> Option<f64> {
        let mut v = self.unary()?;
        loop {
            if self.eat(b'*') {
                v *= self.unary()?;
            } else if self.eat(b'/') {
                v /= self.unary()?;
            } else {
                return Some(v);
            }
        }
    }

    fn unary(&mut self) -> Option<f64> {
        if self.eat(b'-') {
            return Some(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.atom()
    }

    fn atom(&mut self) -> Option<f64> {
        self.skip_ws();
        if self.eat(b'(') {
            let v = self.expr()?;
            return self.eat(b')').then_some(v);
        }
        let rest = &self.s[self.pos..];
        if rest.starts_with(b"sqrt") {
            self.pos += 4;
            if !self.eat(b'(') {
                return None;
            }
            let v = self.expr()?;
            return self.eat(b')').then(|| v.sqrt());
        }
        if rest.starts_with(b"pi") {
            self.pos += 2;
            return Some(std::f64::consts::PI);
        }
        let start = self.pos;
        while self.pos < self.s.len() {
            let c = self.s[self.pos];
            let exp_sign = (c == b'-' || c == b'+')
                && self.pos > start
                && matches!(self.s[self.pos - 1], b'e' | b'E');
            if c.is_ascii_digit() || c == b'.' || c == b'e' || c == b'E' || exp_sign {
                self.pos += 1;
            } else {
                break;
            }
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }
}

/// A CSV document: header, rows of cells, optional trailing `# ` lines.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub trailer: Vec<String>,
}

impl CsvTable {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        CsvTable { header: header.into_iter().map(Into::into).collect(), ..Default::default() }
    }

    pub fn push_numbers(&mut self, row: &[f64]) {
        self.rows.push(row.iter().map(|&v| fmt_f64(v)).collect());
    }

    /// UTF-8, comma separated, LF line endings.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.header.join(","));
        for row in &self.rows {
            let _ = writeln!(out, "{}", row.join(","));
        }
        for line in &self.trailer {
            let _ = writeln!(out, "# {line}");
        }
        out
    }
}

/// Writes through a sibling temporary file and renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let name = path
        .file_name()
        .ok_or_else(|| Error::Io(std::io::Error::other(format!("{} is not a file path", path.display()))))?;
    let tmp = dir.join(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    Ok(result?)
}

/// One polyline of an [`SvgPlot`].
#[derive(Debug, Clone)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

/// Minimal static line plot.
#[derive(Debug, Clone)]
pub struct SvgPlot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<Series>,
}

impl SvgPlot {
    pub fn render(&self) -> String {
        const W: f64 = 640.0;
        const H: f64 = 420.0;
        const LEFT: f64 = 70.0;
        const RIGHT: f64 = 150.0;
        const TOP: f64 = 40.0;
        const BOTTOM: f64 = 50.0;

        let finite = self
            .series
            .iter()
            .flat_map(|s| s.points.iter())
            .filter(|(x, y)| x.is_finite() && y.is_finite());
        let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for &(x, y) in finite {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        if !x0.is_finite() {
            (x0, x1, y0, y1) = (0.0, 1.0, 0.0, 1.0);
        }
        if x1 <= x0 {
            x1 = x0 + 1.0;
        }
        if y1 <= y0 {
            y0 -= 0.5;
            y1 += 0.5;
        }
        let pw = W - LEFT - RIGHT;
        let ph = H - TOP - BOTTOM;
        let sx = |x: f64| LEFT + (x - x0) / (x1 - x0) * pw;
        let sy = |y: f64| TOP + (y1 - y) / (y1 - y0) * ph;

        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(out, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
        let _ = writeln!(out, r#"<text x="{}" y="22" text-anchor="middle" font-size="14">{}</text>"#, LEFT + pw / 2.0, escape(&self.title));
        let _ = writeln!(
            out,
            r#"<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#
        );
        for i in 0..=4 {
            let fx = x0 + (x1 - x0) * i as f64 / 4.0;
            let fy = y0 + (y1 - y0) * i as f64 / 4.0;
            let _ = writeln!(out, r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{}</text>"#, sx(fx), TOP + ph + 16.0, tick(fx));
            let _ = writeln!(out, r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"#, LEFT - 6.0, sy(fy) + 4.0, tick(fy));
        }
        let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#, LEFT + pw / 2.0, H - 12.0, escape(&self.x_label));
        let _ = writeln!(
            out,
            r#"<text x="16" y="{}" text-anchor="middle" transform="rotate(-90 16 {})">{}</text>"#,
            TOP + ph / 2.0,
            TOP + ph / 2.0,
            escape(&self.y_label)
        );
        let n = self.series.len().max(1);
        for (i, s) in self.series.iter().enumerate() {
            // later series are drawn darker
            let shade = 200 - (i * 180 / n.max(2).saturating_sub(1).max(1)).min(200);
            let color = format!("rgb({shade},{shade},{})", 255 - shade / 3);
            let pts: Vec<String> = s
                .points
                .iter()
                .filter(|(x, y)| x.is_finite() && y.is_finite())
                .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
                .collect();
            let _ = writeln!(out, r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#, pts.join(" "));
            let ly = TOP + 14.0 + 16.0 * i as f64;
            let lx = LEFT + pw + 10.0;
            let _ = writeln!(out, r#"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="2"/>"#, lx + 18.0);
            let _ = writeln!(out, r#"<text x="{}" y="{}">{}</text>"#, lx + 24.0, ly + 4.0, escape(&s.label));
        }
        out.push_str("</svg>\n");
        out
    }
}

fn tick(v: f64) -> String {
    let r = (v * 1000.0).round() / 1000.0;
    fmt_f64(if r == 0.0 { 0.0 } else { r })
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_shortest_round_trip() {
        assert_eq!(fmt_f64(0.0), "0");
        assert_eq!(fmt_f64(0.5), "0.5");
        assert_eq!(fmt_f64(-3.0), "-3");
        assert_eq!(fmt_f64(1e-300), "1e-300");
        assert_eq!(fmt_f64(f64::NEG_INFINITY), "-inf");
        for x in [0.1, 1.0 / 3.0, 2.0f64.sqrt() * 1e-7, 6.02e23, -1.234_567_890_123_456_7e-200] {
            assert_eq!(fmt_f64(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn parses_expressions() {
        assert_eq!(parse_number("0.5").unwrap(), 0.5);
        assert_eq!(parse_number("-1").unwrap(), -1.0);
        assert_eq!(parse_number("1/3").unwrap(), 1.0 / 3.0);
        assert_eq!(parse_number("sqrt(1/3)").unwrap(), (1.0f64 / 3.0).sqrt());
        assert_eq!(parse_number("2.5e-3").unwrap(), 2.5e-3);
        assert_eq!(parse_number("1e+2").unwrap(), 100.0);
        assert_eq!(parse_number(" (1 + 2) * 3 ").unwrap(), 9.0);
        let w = (12.0 + 6.0 * std::f64::consts::PI + (144.0 + 96.0 * std::f64::consts::PI).sqrt())
            / (24.0 + 18.0 * std::f64::consts::PI);
        assert_eq!(parse_number("(12+6*pi+sqrt(144+96*pi))/(24+18*pi)").unwrap(), w);
        for bad in ["", "abc", "1/", "sqrt(2", "1 2", "1/0"] {
            assert!(parse_number(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn parses_lists() {
        assert_eq!(parse_number_list("1,1/2,1/3").unwrap(), vec![1.0, 0.5, 1.0 / 3.0]);
        assert_eq!(parse_number_list("sqrt(1/4),2").unwrap(), vec![0.5, 2.0]);
    }

    #[test]
    fn csv_render() {
        let mut t = CsvTable::new(["t", "u"]);
        t.push_numbers(&[0.0, 0.5]);
        t.trailer.push("PASS".into());
        assert_eq!(t.render(), "t,u\n0,0.5\n# PASS\n");
    }

    #[test]
    fn atomic_write_replaces_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        write_atomic(&path, "a\n").unwrap();
        write_atomic(&path, "b\n").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "b\n");
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
        assert!(write_atomic(&dir.path().join("missing/out.csv"), "x").is_err());
    }

    #[test]
    fn svg_has_one_polyline_per_series() {
        let plot = SvgPlot {
            title: "t".into(),
            x_label: "x".into(),
            y_label: "y".into(),
            series: vec![
                Series { label: "a".into(), points: vec![(0.0, 0.0), (1.0, 1.0)] },
                Series { label: "b<".into(), points: vec![(0.0, 1.0), (1.0, 0.0)] },
            ],
        };
        let svg = plot.render();
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains("b&lt;"));
        assert!(svg.ends_with("</svg>\n"));
    }
}
