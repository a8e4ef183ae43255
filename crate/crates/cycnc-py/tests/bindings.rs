use pyo3::prelude::*;
use pyo3::types::PyDict;

fn run(code: &std::ffi::CStr) {
    Python::attach(|py| {
        let module = pyo3::wrap_pymodule!(cycnc::cycnc)(py);
        let locals = PyDict::new(py);
        locals.set_item("cycnc", module).unwrap();
        if let Err(e) = py.run(code, None, Some(&locals)) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn cyclotomic_arithmetic() {
    run(c"
z = cycnc.Cyclotomic.zeta(3, 1)
one = cycnc.Cyclotomic('1', 3)
assert z * z * z == one
assert (z * z + z + one).is_zero()
assert z.inv() == z * z
assert z ** -1 == z * z
assert (one / z) == z * z
assert z.order == 3
try:
    one / cycnc.Cyclotomic('0', 3)
    raise AssertionError('expected ZeroDivisionError')
except ZeroDivisionError:
    pass
try:
    cycnc.Cyclotomic('q+', 3)
    raise AssertionError('expected ValueError')
except ValueError:
    pass
");
}

#[test]
fn presentations() {
    run(c"
j = cycnc.Presentation.jackson(3, 1, '1')
assert j.is_confluent()
assert j.unresolved_overlaps() == []
assert j.names == ['e0', 'e1', 'e2']
assert j.hilbert_series(3) == [1, 3, 6, 10]
k = cycnc.Presentation.kummer_witt(4, 1)
assert not k.is_confluent()
assert len(k.unresolved_overlaps()) > 0
again = cycnc.Presentation.from_json(j.to_json())
assert again.to_json() == j.to_json()
assert j.normal_form([1, 0]) != ''
try:
    j.normal_form([7])
    raise AssertionError('expected ValueError')
except ValueError:
    pass
");
}

#[test]
fn modules_and_ext() {
    run(c"
m = cycnc.Representation.torsion(3, 3, 1, '1', '2')
assert m.dim == 3
assert m.verify()
assert len(m.central_character()) == 3
same = cycnc.Representation.from_json(m.to_json())
assert same.matrices() == m.matrices()
d, inner, hom = cycnc.ext1(m, m)
assert hom >= 1
assert inner == m.dim * m.dim - hom
");
}

#[test]
fn cli_and_criteria() {
    run(c"
code, out = cycnc.run_cli(['algebra', 'build', '--family', 'jackson', '--n', '3', '--r', '1', '--x', '1'])
assert code == 0, out
code, out = cycnc.run_cli(['no-such-command'])
assert code == 2
ok, text = cycnc.criterion(4)
assert ok
import json
assert json.loads(text)['id'] == 4
");
}
