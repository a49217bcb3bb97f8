//! Standalone SVG figures: the polygon outline, translucent overlay
//! quadrilaterals, vertex labels `a1..an` and a legend.
//!
//! All coordinates are integer arithmetic on the input coordinates, so the
//! output is byte-identical for identical input.

use std::fmt::Write;

use kgon::{ConvexPolygon, Error, IndexTuple};

/// Overlay fill colors, cycled in order.
const PALETTE: [&str; 6] = [
    "#f1c40f", "#e74c3c", "#3498db", "#2ecc71", "#9b59b6", "#e67e22",
];

/// Renders `poly` with translucent `overlays` into a standalone SVG
/// document. The viewbox fits the polygon's bounding box with a 5% margin;
/// the y-axis is flipped so larger y is up, as in plane geometry.
pub fn render_svg(poly: &ConvexPolygon, overlays: &[(IndexTuple, String)]) -> Result<String, Error> {
    for (tuple, _) in overlays {
        tuple.check_on(poly)?;
    }

    let xs = poly.vertices().iter().map(|p| p.x);
    let ys = poly.vertices().iter().map(|p| p.y);
    let (min_x, max_x) = (xs.clone().min().unwrap(), xs.max().unwrap());
    let (min_y, max_y) = (ys.clone().min().unwrap(), ys.max().unwrap());
    let span = (max_x - min_x).max(max_y - min_y).max(1);
    let margin_x = ((max_x - min_x) * 5 / 100).max(1);
    let margin_y = ((max_y - min_y) * 5 / 100).max(1);
    let width = (max_x - min_x) + 2 * margin_x;
    let height = (max_y - min_y) + 2 * margin_y;
    let map = |p: kgon::Point2| -> (i64, i64) {
        (p.x - min_x + margin_x, (max_y - p.y) + margin_y)
    };
    let font = (span / 30).max(1);
    let dot = (span / 200).max(1);
    let stroke = (span / 400).max(1);

    let mut doc = String::new();
    writeln!(
        doc,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width} {height}\" \
         width=\"{width}\" height=\"{height}\">"
    )
    .expect("string write");
    writeln!(doc, "  <rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>").unwrap();

    let points_attr = |indices: &mut dyn Iterator<Item = usize>| -> String {
        let mut out = String::new();
        for (i, idx) in indices.enumerate() {
            let (x, y) = map(poly.point(idx));
            if i > 0 {
                out.push(' ');
            }
            write!(out, "{x},{y}").unwrap();
        }
        out
    };

    for (i, (tuple, label)) in overlays.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let pts = points_attr(&mut tuple.indices().iter().copied());
        writeln!(
            doc,
            "  <polygon class=\"overlay\" points=\"{pts}\" fill=\"{color}\" \
             fill-opacity=\"0.45\" stroke=\"{color}\" stroke-width=\"{stroke}\">\
             <title>{label}</title></polygon>"
        )
        .unwrap();
    }

    let outline = points_attr(&mut (0..poly.len()));
    writeln!(
        doc,
        "  <polygon class=\"outline\" points=\"{outline}\" fill=\"none\" \
         stroke=\"black\" stroke-width=\"{stroke}\"/>"
    )
    .unwrap();

    for (i, &p) in poly.vertices().iter().enumerate() {
        let (x, y) = map(p);
        writeln!(doc, "  <circle cx=\"{x}\" cy=\"{y}\" r=\"{dot}\" fill=\"black\"/>").unwrap();
        writeln!(
            doc,
            "  <text x=\"{}\" y=\"{}\" font-size=\"{font}\">a{}</text>",
            x + dot * 2,
            y - dot * 2,
            i + 1
        )
        .unwrap();
    }

    for (i, (_, label)) in overlays.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let box_y = margin_y / 2 + (i as i64) * font * 3 / 2;
        writeln!(
            doc,
            "  <rect class=\"legend\" x=\"{}\" y=\"{box_y}\" width=\"{font}\" height=\"{font}\" \
             fill=\"{color}\" fill-opacity=\"0.45\"/>",
            margin_x / 2,
        )
        .unwrap();
        writeln!(
            doc,
            "  <text x=\"{}\" y=\"{}\" font-size=\"{font}\">{label}</text>",
            margin_x / 2 + font * 2,
            box_y + font,
        )
        .unwrap();
    }

    doc.push_str("</svg>\n");
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use kgon::{canonicalize, counterexample_polygon, Point2};

    fn square() -> ConvexPolygon {
        ConvexPolygon::new(&[
            Point2::new(0, 0),
            Point2::new(2, 0),
            Point2::new(2, 2),
            Point2::new(0, 2),
        ])
        .unwrap()
    }

    #[test]
    fn bare_polygon_has_one_outline() {
        let doc = render_svg(&square(), &[]).unwrap();
        assert!(doc.starts_with("<svg"));
        assert_eq!(doc.matches("class=\"outline\"").count(), 1);
        assert_eq!(doc.matches("class=\"overlay\"").count(), 0);
        assert!(doc.ends_with("</svg>\n"));
    }

    #[test]
    fn overlays_and_legend_entries_match() {
        let poly = counterexample_polygon();
        let overlays = vec![
            (canonicalize(&[3, 7, 11, 15], 16).unwrap(), "optimal".to_string()),
            (canonicalize(&[0, 3, 7, 11], 16).unwrap(), "reported".to_string()),
        ];
        let doc = render_svg(&poly, &overlays).unwrap();
        assert_eq!(doc.matches("class=\"overlay\"").count(), 2);
        assert_eq!(doc.matches("class=\"legend\"").count(), 2);
        assert_eq!(doc.matches("<text").count(), 16 + 2);
    }

    #[test]
    fn output_is_deterministic() {
        let poly = counterexample_polygon();
        let overlays = vec![(canonicalize(&[3, 7, 11, 15], 16).unwrap(), "best".to_string())];
        assert_eq!(
            render_svg(&poly, &overlays).unwrap(),
            render_svg(&poly, &overlays).unwrap()
        );
    }

    #[test]
    fn out_of_range_overlay_is_rejected() {
        let overlay = vec![(canonicalize(&[0, 2, 5], 6).unwrap(), "bad".to_string())];
        assert_eq!(
            render_svg(&square(), &overlay).unwrap_err(),
            Error::IndexOutOfRange { index: 5, n: 4 }
        );
    }
}
