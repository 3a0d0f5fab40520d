import pytest

from homoglue.fixtures import fixture
from homoglue.quiver import simple
from homoglue.auscond import (STATEMENTS, ConditionResult, auslander_battery,
                              consistency_alarms, default_sample)


def test_battery_kA2():
    A = fixture('kA2').algebra
    battery = auslander_battery(A, 2, sample=default_sample(A, size=3))
    values = battery.values()
    assert len(values) == 2 * len(STATEMENTS)
    assert all(v is True for v in values.values())
    assert battery.alarms == []
    assert battery.condition('regular_module').exact
    assert battery.condition('regular_module_op').holds


def test_battery_kron2():
    A = fixture('kron2').algebra
    battery = auslander_battery(A, 1, sample=default_sample(A, size=3))
    assert battery.values()['regular_module'] is False
    assert battery.values()['regular_module_op'] is False
    assert battery.condition('projectives').witness
    assert battery.alarms == []


def test_battery_explicit_list():
    A = fixture('A3rad2').algebra
    battery = auslander_battery(A, 3, sample=[simple(A, v)
                                              for v in A.vertices])
    assert battery.sample.description == 'explicit sample'
    assert battery.values()['envelope_shift'] is True
    assert 'sample: explicit sample' in str(battery)
    with pytest.raises(ValueError):
        auslander_battery(A, 1, sample=[])


def test_consistency_alarms():
    exact = ConditionResult('regular_module', 'x', True, exact=True)
    broken = ConditionResult('envelope', 'y', False, witness='M')
    alarms = consistency_alarms([exact, broken])
    assert alarms == ['regular_module holds for every module but envelope '
                      'fails (M)']
    assert consistency_alarms([broken]) == []
    assert str(broken) == 'envelope: false (y); witness M'


def test_battery_kron2_envelope_witness():
    A = fixture('kron2').algebra
    sample = default_sample(A, size=0)
    assert sample.names()[:2] == ['P(0)', 'P(1)']
    battery = auslander_battery(A, 1, sample=sample)
    envelope = battery.condition('envelope')
    assert envelope.holds is False
    assert envelope.witness == 'P(0): degree 0 has dimension 1 > 0'
    assert battery.condition('envelope_shift').witness == envelope.witness
