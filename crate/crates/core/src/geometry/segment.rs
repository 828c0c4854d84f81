use std::cmp::Ordering;

use super::point::{orientation, Point};

/// Conservative floating bounding box, only ever used to skip exact tests.
#[derive(Clone, Copy, Debug)]
pub struct Bbox {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

fn pad(v: f64) -> f64 {
    1e-9 * (1.0 + v.abs())
}

impl Bbox {
    pub fn of_point(p: &Point) -> Bbox {
        let (x, y) = p.to_f64();
        Bbox {
            min_x: x - pad(x),
            min_y: y - pad(y),
            max_x: x + pad(x),
            max_y: y + pad(y),
        }
    }

    pub fn of_segment(a: &Point, b: &Point) -> Bbox {
        let (ax, ay) = a.to_f64();
        let (bx, by) = b.to_f64();
        let (lx, hx) = (ax.min(bx), ax.max(bx));
        let (ly, hy) = (ay.min(by), ay.max(by));
        Bbox {
            min_x: lx - pad(lx),
            min_y: ly - pad(ly),
            max_x: hx + pad(hx),
            max_y: hy + pad(hy),
        }
    }

    pub fn overlaps(&self, o: &Bbox) -> bool {
        self.min_x <= o.max_x
            && o.min_x <= self.max_x
            && self.min_y <= o.max_y
            && o.min_y <= self.max_y
    }
}

/// True iff `p` lies on the closed segment `ab`.
pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    orientation(a, b, p) == Ordering::Equal && within(a, b, p)
}

/// Assuming collinearity, whether `p` is inside the bounding box of `ab`.
fn within(a: &Point, b: &Point, p: &Point) -> bool {
    let (lx, hx) = if a.x <= b.x {
        (&a.x, &b.x)
    } else {
        (&b.x, &a.x)
    };
    let (ly, hy) = if a.y <= b.y {
        (&a.y, &b.y)
    } else {
        (&b.y, &a.y)
    };
    *lx <= p.x && p.x <= *hx && *ly <= p.y && p.y <= *hy
}

/// How two closed segments meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Contact {
    Disjoint,
    /// Transversal crossing at a point interior to both segments.
    Proper(Point),
    /// They share exactly one point, which is an endpoint of at least one of them.
    Touch(Point),
    /// Collinear with a common sub-segment of positive length.
    Overlap,
}

pub fn classify(p: &Point, q: &Point, r: &Point, s: &Point) -> Contact {
    let o1 = orientation(p, q, r);
    let o2 = orientation(p, q, s);
    let o3 = orientation(r, s, p);
    let o4 = orientation(r, s, q);
    use Ordering::Equal;
    if o1 == Equal && o2 == Equal {
        // collinear: shared points form an interval
        let key = |a: &Point| if p.x != q.x { a.x.clone() } else { a.y.clone() };
        let (mut a0, mut a1) = (key(p), key(q));
        if a0 > a1 {
            std::mem::swap(&mut a0, &mut a1);
        }
        let (mut b0, mut b1) = (key(r), key(s));
        if b0 > b1 {
            std::mem::swap(&mut b0, &mut b1);
        }
        let lo = if a0 > b0 { a0 } else { b0 };
        let hi = if a1 < b1 { a1 } else { b1 };
        return match lo.cmp(&hi) {
            Ordering::Greater => Contact::Disjoint,
            Ordering::Less => Contact::Overlap,
            Ordering::Equal => {
                let pt = [p, q, r, s]
                    .into_iter()
                    .find(|x| key(x) == lo)
                    .unwrap()
                    .clone();
                Contact::Touch(pt)
            }
        };
    }
    if o1 != Equal && o2 != Equal && o3 != Equal && o4 != Equal {
        if o1 != o2 && o3 != o4 {
            return Contact::Proper(intersection(p, q, r, s));
        }
        return Contact::Disjoint;
    }
    // exactly one endpoint configuration lies on the other segment
    if o1 == Equal && within(p, q, r) {
        return Contact::Touch(r.clone());
    }
    if o2 == Equal && within(p, q, s) {
        return Contact::Touch(s.clone());
    }
    if o3 == Equal && within(r, s, p) {
        return Contact::Touch(p.clone());
    }
    if o4 == Equal && within(r, s, q) {
        return Contact::Touch(q.clone());
    }
    Contact::Disjoint
}

/// Intersection of the supporting lines of two non-parallel segments.
pub fn intersection(p: &Point, q: &Point, r: &Point, s: &Point) -> Point {
    let dx1 = &q.x - &p.x;
    let dy1 = &q.y - &p.y;
    let dx2 = &s.x - &r.x;
    let dy2 = &s.y - &r.y;
    let denom = &dx1 * &dy2 - &dy1 * &dx2;
    let t = ((&r.x - &p.x) * &dy2 - (&r.y - &p.y) * &dx2) / denom;
    Point::new(&p.x + &t * &dx1, &p.y + &t * &dy1)
}
