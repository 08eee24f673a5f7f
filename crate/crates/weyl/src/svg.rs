//! Static SVG pictures of admissible alcoves in rank ≤ 2.

use std::collections::BTreeSet;
use std::fmt::Write;

use num::rational::Ratio;

use crate::adm::{admissible_set, extreme_elements};
use crate::error::{Result, WeylError};
use crate::group::{AffineGroup, Elem, Family};

type Q = Ratio<i64>;

const SCALE: f64 = 120.0;
const DARK: &str = "#555555";
const LIGHT: &str = "#cccccc";

/// Vertices of the base alcove, indexed like the simple reflections.
pub fn base_alcove(g: &AffineGroup) -> Vec<Vec<Q>> {
    let h = Q::new(1, 2);
    let z = Q::from_integer(0);
    let one = Q::from_integer(1);
    match (g.family, g.m) {
        (Family::Odd, 1) => vec![vec![z], vec![h]],
        (Family::Odd, 2) => vec![vec![z, z], vec![h, z], vec![h, h]],
        (Family::Even, 2) => vec![vec![z, z], vec![one, z], vec![h, h]],
        _ => Vec::new(),
    }
}

fn act(g: &AffineGroup, w: &Elem, p: &[Q]) -> Vec<Q> {
    let _ = g;
    (0..p.len())
        .map(|i| {
            let src = w.sigma.perm[i] as usize;
            Q::from_integer(w.sigma.signs[i] as i64) * p[src] + Q::from_integer(w.t[i])
        })
        .collect()
}

fn f(q: Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Draws Adm(μ_{r,s}): extreme alcoves dark gray, the other admissible alcoves light gray,
/// the base alcove outlined in bold. For a non-Iwahori facet, the admissible facets
/// w(F_I) are marked with dots.
pub fn emit_alcove_svg(g: &AffineGroup, r: usize, s: usize, vertices: &BTreeSet<usize>) -> Result<String> {
    if g.n > 5 {
        return Err(WeylError::RankTooLarge(g.n));
    }
    let adm = admissible_set(g, r, s)?;
    let extremes: BTreeSet<Elem> = extreme_elements(g, r, s)?.into_iter().collect();
    let base = base_alcove(g);
    let alcoves: Vec<(bool, Vec<Vec<Q>>)> = adm
        .iter()
        .map(|w| (extremes.contains(w), base.iter().map(|v| act(g, w, v)).collect()))
        .collect();
    let iwahori = vertices.len() == g.m + 1;
    let facet_points: Vec<Vec<Q>> = if iwahori {
        Vec::new()
    } else {
        let k = Q::from_integer(vertices.len() as i64);
        let bary: Vec<Q> = (0..g.m)
            .map(|i| vertices.iter().map(|&v| base[v][i]).fold(Q::from_integer(0), |a, b| a + b) / k)
            .collect();
        let set: BTreeSet<Vec<Q>> = adm.iter().map(|w| act(g, w, &bary)).collect();
        set.into_iter().collect()
    };

    // Window: bounding box of the admissible alcoves, padded and snapped to half-integers.
    let coords = |i: usize| alcoves.iter().flat_map(move |(_, a)| a.iter().map(move |v| f(v[i])));
    let lo = |i: usize| (coords(i).fold(f64::INFINITY, f64::min) * 2.0 - 1.0).floor() / 2.0;
    let hi = |i: usize| (coords(i).fold(f64::NEG_INFINITY, f64::max) * 2.0 + 1.0).ceil() / 2.0;
    let (x0, x1) = (lo(0), hi(0));
    let (y0, y1) = if g.m == 2 { (lo(1), hi(1)) } else { (-0.25, 0.25) };
    let width = (x1 - x0) * SCALE + 40.0;
    let height = (y1 - y0) * SCALE + 40.0;
    let px = |x: f64| (x - x0) * SCALE + 20.0;
    let py = |y: f64| (y1 - y) * SCALE + 20.0;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    )
    .unwrap();
    writeln!(out, r#"<title>Adm for n={} (r,s)=({r},{s})</title>"#, g.n).unwrap();
    writeln!(out, r#"<rect x="0" y="0" width="{width:.0}" height="{height:.0}" fill="white"/>"#).unwrap();

    if g.m == 1 {
        for (extreme, a) in &alcoves {
            let (u, v) = (f(a[0][0]), f(a[1][0]));
            let (l, rr) = (u.min(v), u.max(v));
            writeln!(
                out,
                r#"<rect x="{:.1}" y="{:.1}" width="{:.1}" height="{:.1}" fill="{}" stroke="none"/>"#,
                px(l),
                py(0.1),
                (rr - l) * SCALE,
                0.2 * SCALE,
                if *extreme { DARK } else { LIGHT }
            )
            .unwrap();
        }
        writeln!(out, r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="black" stroke-width="1"/>"#, px(x0), py(0.0), px(x1), py(0.0)).unwrap();
        // Walls 2y ∈ Z.
        let mut k = (x0 * 2.0).ceil() as i64;
        while (k as f64) / 2.0 <= x1 {
            let x = k as f64 / 2.0;
            writeln!(out, r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="black" stroke-width="1"/>"#, px(x), py(0.15), px(x), py(-0.15)).unwrap();
            k += 1;
        }
        writeln!(
            out,
            r#"<rect x="{:.1}" y="{:.1}" width="{:.1}" height="{:.1}" fill="none" stroke="black" stroke-width="4"/>"#,
            px(0.0),
            py(0.1),
            0.5 * SCALE,
            0.2 * SCALE
        )
        .unwrap();
    } else {
        for (extreme, a) in &alcoves {
            let pts: Vec<String> = a.iter().map(|v| format!("{:.1},{:.1}", px(f(v[0])), py(f(v[1])))).collect();
            writeln!(
                out,
                r#"<polygon points="{}" fill="{}" stroke="none"/>"#,
                pts.join(" "),
                if *extreme { DARK } else { LIGHT }
            )
            .unwrap();
        }
        // Hyperplanes: y_1 ± y_2 ∈ Z and y_i ∈ Z (n even) or 2 y_i ∈ Z (n odd).
        let step = if g.family == Family::Even { 1.0 } else { 0.5 };
        let line = |out: &mut String, a: (f64, f64), b: (f64, f64)| {
            writeln!(
                out,
                r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="black" stroke-width="1"/>"#,
                px(a.0),
                py(a.1),
                px(b.0),
                py(b.1)
            )
            .unwrap();
        };
        let mut k = (x0 / step).ceil() * step;
        while k <= x1 + 1e-9 {
            line(&mut out, (k, y0), (k, y1));
            k += step;
        }
        let mut k = (y0 / step).ceil() * step;
        while k <= y1 + 1e-9 {
            line(&mut out, (x0, k), (x1, k));
            k += step;
        }
        // Diagonals y1 - y2 = c and y1 + y2 = c, clipped to the window.
        let clip = |c: f64, sign: f64| -> Option<((f64, f64), (f64, f64))> {
            // Points with y1 = c + sign * y2 ... parametrize by y2.
            let mut pts = Vec::new();
            for &y in &[y0, y1] {
                let x = c - sign * y;
                if x >= x0 - 1e-9 && x <= x1 + 1e-9 {
                    pts.push((x, y));
                }
            }
            for &x in &[x0, x1] {
                let y = (c - x) * sign;
                if y > y0 + 1e-9 && y < y1 - 1e-9 {
                    pts.push((x, y));
                }
            }
            if pts.len() >= 2 { Some((pts[0], pts[1])) } else { None }
        };
        for sign in [1.0, -1.0] {
            let span = (x1 - x0) + (y1 - y0);
            let mut c = (x0.min(x0 + sign * y0).min(x0 + sign * y1) - span).floor();
            let cmax = (x1.max(x1 + sign * y0).max(x1 + sign * y1) + span).ceil();
            while c <= cmax {
                if let Some((a, b)) = clip(c, sign) {
                    line(&mut out, a, b);
                }
                c += 1.0;
            }
        }
        let pts: Vec<String> =
            base.iter().map(|v| format!("{:.1},{:.1}", px(f(v[0])), py(f(v[1])))).collect();
        writeln!(out, r#"<polygon points="{}" fill="none" stroke="black" stroke-width="4"/>"#, pts.join(" ")).unwrap();
    }
    for p in &facet_points {
        let y = if g.m == 2 { f(p[1]) } else { 0.0 };
        writeln!(out, r#"<circle cx="{:.1}" cy="{:.1}" r="5" fill="black"/>"#, px(f(p[0])), py(y)).unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}
