//! gnuplot scripts for sampled curves.

use std::fmt::Write as _;

use crate::bounds::CurveId;

/// Points marked on every plot.
pub const SPECIAL_POINTS: [(f64, f64, &str); 3] = [
    (2.0 / 3.0, 2.0 / 9.0, "(2/3, 2/9)"),
    (6.0 / 7.0, 6.0 / 49.0, "(6/7, 6/49)"),
    (8.0 / 9.0, 8.0 / 81.0, "(8/9, 8/81)"),
];

/// Script plotting `csv` (columns `x,y,curve_id`) with the special points
/// marked; lower-bound curves are dashed.
pub fn gnuplot_script(curve: CurveId, csv: &str, png: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "set terminal pngcairo size 800,600");
    let _ = writeln!(s, "set output '{png}'");
    let _ = writeln!(s, "set datafile separator ','");
    let _ = writeln!(s, "set key top left");
    let _ = writeln!(s, "set xlabel 'shadow density x'");
    let _ = writeln!(s, "set ylabel 'edge density y'");
    let _ = writeln!(s, "set xrange [0:1]");
    let _ = writeln!(s, "set yrange [0:*]");
    for (i, (x, y, label)) in SPECIAL_POINTS.iter().enumerate() {
        let _ = writeln!(
            s,
            "set label {} '{label}' at {x},{y} point pointtype 7 offset 1,0.5",
            i + 1
        );
    }
    let dash = if curve.is_upper_bound() { 1 } else { 2 };
    let _ = writeln!(
        s,
        "plot '{csv}' using 1:2 every ::1 with lines dashtype {dash} linewidth 2 title '{curve}'"
    );
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn script_mentions_points_and_style() {
        let s = gnuplot_script(CurveId::FanoLower, "c.csv", "c.png");
        assert!(s.contains("'(6/7, 6/49)'"));
        assert!(s.contains("dashtype 2"));
        assert!(s.contains("plot 'c.csv'"));
        let s = gnuplot_script(CurveId::CancellativeRightT3, "c.csv", "c.png");
        assert!(s.contains("dashtype 1"));
    }
}
