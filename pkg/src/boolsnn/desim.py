"""Discrete-event simulation of clockless two-valued logic.

Time is an integer count of picoseconds.  Gates carry a constant
propagation delay and an inertial rejection window: any output pulse that
would be narrower than the rejection window is suppressed, which is what
lets a chain of real logic gates swallow runt pulses.  The default delay
of 280 ps models the measured propagation delay of a single inverter on
the target reconfigurable fabric; one inverter pair is therefore 560 ps.

The netlist may be cyclic (the circuits are autonomous), every net has a
single driver, and all sources (stimulus ports and latch states) start at
0.  Before any event is processed the engine settles combinational nets
to the closure of that all-zero source state (an inverter fed 0 rests at
1), mirroring power-up settling; the settle pass emits no trace events.
Nets inside zero-fixpoint-free cores, such as a ring of three inverters,
cannot settle and begin oscillating at t=0 through ordinary events.
Simulation is strictly event-driven after that: nothing is evaluated
while no transition is in flight.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

import numpy as np
from numba import njit

# 1 ps resolution; all architectural constants are exact multiples.
GATE_DELAY_PS = 280
TAU_P_PS = 2 * GATE_DELAY_PS  # inverter-pair delay, 560 ps
CLOCK_STEP_PS = 10_000        # the 10 ns step of the synchronous peripherals


class GateKind(enum.IntEnum):
    INV = 0
    XOR2 = 1
    OR2 = 2
    AND2 = 3
    DFF = 4          # inputs (clk, d); captures d on clk rising edge
    SRLATCH = 5      # inputs (s, r)
    TLATCH = 6       # inputs (t, rst); toggles on t rising edge, rst forces 0
    BEHAVIORAL_ACM = 7  # inputs (exc, inh, rst); see eval_gate


GATE_ARITY = {
    GateKind.INV: 1,
    GateKind.XOR2: 2,
    GateKind.OR2: 2,
    GateKind.AND2: 2,
    GateKind.DFF: 2,
    GateKind.SRLATCH: 2,
    GateKind.TLATCH: 2,
    GateKind.BEHAVIORAL_ACM: 3,
}


class SimulationError(Exception):
    pass


class BudgetExceeded(SimulationError):
    """Raised when the applied-event budget is exhausted (runaway activity)."""

    def __init__(self, message, net, label=None):
        super().__init__(message)
        self.net = net
        self.label = label


@dataclass(frozen=True)
class GateInstance:
    kind: GateKind
    inputs: tuple[int, ...]
    output: int
    delay: int = GATE_DELAY_PS
    reject: int = GATE_DELAY_PS
    param: int = 0  # BEHAVIORAL_ACM capacity; unused otherwise

    def validate(self):
        if len(self.inputs) != GATE_ARITY[self.kind]:
            raise ValueError(
                f"{self.kind.name} takes {GATE_ARITY[self.kind]} inputs, "
                f"got {len(self.inputs)}")
        if self.delay <= 0:
            raise ValueError(f"gate delay must be positive, got {self.delay}")
        if not 0 <= self.reject <= self.delay:
            raise ValueError(
                f"reject window must lie in [0, delay], got {self.reject}")
        if self.kind is GateKind.BEHAVIORAL_ACM and self.param < 1:
            raise ValueError("BEHAVIORAL_ACM needs capacity >= 1")


@dataclass
class Netlist:
    """Flat gate-level circuit: single-driver nets, gates, probes, stimuli.

    ``ports`` maps stimulus labels to net ids (externally driven nets);
    ``probes`` is an ordered list of (net, label) pairs to be traced.
    """

    num_nets: int = 0
    gates: list[GateInstance] = field(default_factory=list)
    ports: dict[str, int] = field(default_factory=dict)
    probes: list[tuple[int, str]] = field(default_factory=list)

    def validate(self):
        driver = [None] * self.num_nets
        for label, net in self.ports.items():
            if driver[net] is not None:
                raise ValueError(f"net {net} (port {label!r}) already driven")
            driver[net] = f"port {label!r}"
        for i, g in enumerate(self.gates):
            g.validate()
            if not 0 <= g.output < self.num_nets:
                raise ValueError(f"gate {i} output net {g.output} out of range")
            if driver[g.output] is not None:
                raise ValueError(
                    f"net {g.output} driven twice ({driver[g.output]} and gate {i})")
            driver[g.output] = f"gate {i}"
            for n in g.inputs:
                if not 0 <= n < self.num_nets:
                    raise ValueError(f"gate {i} input net {n} out of range")
        for net, label in self.probes:
            if not 0 <= net < self.num_nets:
                raise ValueError(f"probe {label!r} net {net} out of range")
        return self


def apply_delay_jitter(netlist, sigma_ps, seed, mean_ps=None):
    """Return a copy of ``netlist`` with per-gate Gaussian delay jitter.

    Each gate's delay is redrawn once as round(N(mean, sigma)), clamped to
    at least 1 ps; the rejection window is clamped down to the new delay
    where needed.  With ``sigma_ps == 0`` the netlist is returned as-is.
    Drawing happens here, once, so a (netlist, seed) pair is reproducible.
    """
    if sigma_ps == 0:
        return netlist
    if seed is None:
        raise ValueError("delay jitter requires a seed")
    rng = np.random.default_rng(seed)
    gates = []
    for g in netlist.gates:
        mean = g.delay if mean_ps is None else mean_ps
        d = max(1, int(round(rng.normal(mean, sigma_ps))))
        gates.append(replace(g, delay=d, reject=min(g.reject, d)))
    return Netlist(netlist.num_nets, gates, dict(netlist.ports),
                   list(netlist.probes))


class NetlistBuilder:
    """Incremental construction helper used by the circuit builders."""

    def __init__(self, gate_delay=GATE_DELAY_PS, reject=None):
        self.gate_delay = gate_delay
        self.reject = gate_delay if reject is None else reject
        self._netlist = Netlist()
        self._const0 = None

    def net(self):
        n = self._netlist.num_nets
        self._netlist.num_nets += 1
        return n

    def const0(self):
        # A never-driven stimulus net, pinned at the all-zero initial state.
        if self._const0 is None:
            self._const0 = self.stimulus("__const0")
        return self._const0

    def stimulus(self, label):
        if label in self._netlist.ports:
            raise ValueError(f"duplicate stimulus label {label!r}")
        n = self.net()
        self._netlist.ports[label] = n
        return n

    def probe(self, net, label):
        self._netlist.probes.append((net, label))

    def gate(self, kind, inputs, delay=None, reject=None, param=0):
        out = self.net()
        d = self.gate_delay if delay is None else delay
        r = min(self.reject if reject is None else reject, d)
        self._netlist.gates.append(
            GateInstance(kind, tuple(inputs), out, d, r, param))
        return out

    def build(self):
        return self._netlist.validate()


@dataclass
class LatchState:
    q: int = 0
    last_clk: int = 0
    count: int = 0  # BEHAVIORAL_ACM only


def eval_gate(kind, inputs, state=None, param=0):
    """Evaluate one gate: returns (output bit, updated latch state).

    Combinational kinds ignore ``state``.  Edge-triggered kinds compare the
    trigger input against ``state.last_clk``, so callers stepping a latch
    must feed inputs in arrival order.  ``param`` is the counter capacity
    for BEHAVIORAL_ACM and is ignored otherwise.
    """
    if len(inputs) != GATE_ARITY[kind]:
        raise ValueError(f"{GateKind(kind).name} expects "
                         f"{GATE_ARITY[kind]} inputs, got {len(inputs)}")
    if kind == GateKind.INV:
        return 1 - inputs[0], state
    if kind == GateKind.XOR2:
        return inputs[0] ^ inputs[1], state
    if kind == GateKind.OR2:
        return inputs[0] | inputs[1], state
    if kind == GateKind.AND2:
        return inputs[0] & inputs[1], state

    st = LatchState() if state is None else state
    if kind == GateKind.DFF:
        clk, d = inputs
        if clk == 1 and st.last_clk == 0:
            st.q = d
        st.last_clk = clk
        return st.q, st
    if kind == GateKind.TLATCH:
        t, rst = inputs
        rising = t == 1 and st.last_clk == 0
        st.last_clk = t
        if rst == 1:
            st.q = 0
        elif rising:
            st.q ^= 1
        return st.q, st
    if kind == GateKind.SRLATCH:
        s, r = inputs
        if s == 1 and r == 0:
            st.q = 1
        elif r == 1 and s == 0:
            st.q = 0
        # s == r == 1: hold (the default conflict policy)
        return st.q, st
    if kind == GateKind.BEHAVIORAL_ACM:
        exc, inh, rst = inputs
        exc_rise = exc == 1 and (st.last_clk & 1) == 0
        inh_rise = inh == 1 and (st.last_clk >> 1 & 1) == 0
        st.last_clk = exc | (inh << 1)
        if rst == 1:
            st.count = 0
        else:
            if exc_rise and st.count < param:
                st.count += 1
            if inh_rise and st.count > 0:
                st.count -= 1
        return 1 if st.count == param else 0, st
    raise ValueError(f"unknown gate kind {kind!r}")


# --- numba kernel -----------------------------------------------------------
#
# The engine state lives in flat arrays.  The heap orders pending
# transitions by (time, serial); per-net pending transitions are mirrored
# in a small ring so inertial cancellation can drop the youngest pending
# event in O(1).  A heap entry whose serial no longer sits at the front of
# its net's ring was cancelled and pops as a no-op.

_DONE = 0
_NEED_HEAP = 1
_NEED_TRACE = 2
_BUDGET = 3
_RING_FULL = 4

_PEND_DEPTH = 8


@njit(cache=True, nogil=True)
def _heap_push(ht, hs, hn, hv, size, t, s, n, v):
    i = size
    ht[i] = t
    hs[i] = s
    hn[i] = n
    hv[i] = v
    while i > 0:
        p = (i - 1) >> 1
        if (ht[p] > ht[i]) or (ht[p] == ht[i] and hs[p] > hs[i]):
            ht[p], ht[i] = ht[i], ht[p]
            hs[p], hs[i] = hs[i], hs[p]
            hn[p], hn[i] = hn[i], hn[p]
            hv[p], hv[i] = hv[i], hv[p]
            i = p
        else:
            break
    return size + 1


@njit(cache=True, nogil=True)
def _heap_pop(ht, hs, hn, hv, size):
    t, s, n, v = ht[0], hs[0], hn[0], hv[0]
    size -= 1
    if size > 0:
        ht[0], hs[0], hn[0], hv[0] = ht[size], hs[size], hn[size], hv[size]
        i = 0
        while True:
            l = 2 * i + 1
            if l >= size:
                break
            r = l + 1
            c = l
            if r < size and ((ht[r] < ht[l]) or (ht[r] == ht[l] and hs[r] < hs[l])):
                c = r
            if (ht[c] < ht[i]) or (ht[c] == ht[i] and hs[c] < hs[i]):
                ht[c], ht[i] = ht[i], ht[c]
                hs[c], hs[i] = hs[i], hs[c]
                hn[c], hn[i] = hn[i], hn[c]
                hv[c], hv[i] = hv[i], hv[c]
                i = c
            else:
                break
    return t, s, n, v, size


@njit(cache=True, nogil=True)
def _run(net_val,
         g_kind, g_in0, g_in1, g_in2, g_out, g_delay, g_reject, g_param,
         g_state, g_count, g_lastin,
         fo_ptr, fo_gate,
         ht, hs, hn, hv, heap_size,
         ring_serial, ring_time, ring_val, ring_head, ring_count,
         trace_t, trace_n, trace_v, trace_len,
         probe_mask, stim_mask, ev_count,
         t_end, serial_next, budget_left, max_fanout, sr_policy,
         counters):
    # counters: [applied, sr_conflicts, overflow net]
    status = _DONE
    while heap_size > 0 and ht[0] <= t_end:
        if heap_size + max_fanout + 1 > ht.shape[0]:
            status = _NEED_HEAP
            break
        if trace_len + 1 > trace_t.shape[0]:
            status = _NEED_TRACE
            break
        t, s, n, v, heap_size = _heap_pop(ht, hs, hn, hv, heap_size)
        if stim_mask[n]:
            # external drivers bypass the inertial machinery; same-time
            # rescheduling collapses because serial order applies last-wins
            if net_val[n] == v:
                continue
        else:
            head = ring_head[n]
            if ring_count[n] == 0 or ring_serial[n, head] != s:
                continue  # cancelled by inertial filtering
            ring_head[n] = (head + 1) % _PEND_DEPTH
            ring_count[n] -= 1
        net_val[n] = v
        ev_count[n] += 1
        if budget_left <= 0:
            status = _BUDGET
            break
        budget_left -= 1
        counters[0] += 1
        if probe_mask[n]:
            trace_t[trace_len] = t
            trace_n[trace_len] = n
            trace_v[trace_len] = v
            trace_len += 1
        for k in range(fo_ptr[n], fo_ptr[n + 1]):
            g = fo_gate[k]
            kind = g_kind[g]
            if kind == 0:  # INV
                out = 1 - net_val[g_in0[g]]
            elif kind == 1:  # XOR2
                out = net_val[g_in0[g]] ^ net_val[g_in1[g]]
            elif kind == 2:  # OR2
                out = net_val[g_in0[g]] | net_val[g_in1[g]]
            elif kind == 3:  # AND2
                out = net_val[g_in0[g]] & net_val[g_in1[g]]
            elif kind == 4:  # DFF
                clk = net_val[g_in0[g]]
                if clk == 1 and g_lastin[g] & 1 == 0:
                    g_state[g] = net_val[g_in1[g]]
                g_lastin[g] = clk
                out = g_state[g]
            elif kind == 6:  # TLATCH
                tin = net_val[g_in0[g]]
                rising = tin == 1 and g_lastin[g] & 1 == 0
                g_lastin[g] = tin
                if net_val[g_in1[g]] == 1:
                    g_state[g] = 0
                elif rising:
                    g_state[g] ^= 1
                out = g_state[g]
            elif kind == 5:  # SRLATCH
                sv = net_val[g_in0[g]]
                rv = net_val[g_in1[g]]
                if sv == 1 and rv == 1:
                    counters[1] += 1
                    if sr_policy == 1:
                        g_state[g] = 1
                    elif sr_policy == 2:
                        g_state[g] = 0
                elif sv == 1:
                    g_state[g] = 1
                elif rv == 1:
                    g_state[g] = 0
                out = g_state[g]
            else:  # BEHAVIORAL_ACM
                exc = net_val[g_in0[g]]
                inh = net_val[g_in1[g]]
                rst = net_val[g_in2[g]]
                last = g_lastin[g]
                exc_rise = exc == 1 and last & 1 == 0
                inh_rise = inh == 1 and (last >> 1) & 1 == 0
                g_lastin[g] = exc | (inh << 1)
                if rst == 1:
                    g_count[g] = 0
                else:
                    if exc_rise and g_count[g] < g_param[g]:
                        g_count[g] += 1
                    if inh_rise and g_count[g] > 0:
                        g_count[g] -= 1
                out = 1 if g_count[g] == g_param[g] else 0

            o = g_out[g]
            cnt = ring_count[o]
            if cnt > 0:
                last_slot = (ring_head[o] + cnt - 1) % _PEND_DEPTH
                projected = ring_val[o, last_slot]
            else:
                projected = net_val[o]
            if out == projected:
                continue
            ts = t + g_delay[g]
            if cnt > 0 and ts - ring_time[o, last_slot] < g_reject[g]:
                # inertial filtering: the would-be pulse is too narrow, so
                # the pending opposite transition and this one annihilate
                ring_count[o] = cnt - 1
                continue
            if cnt == _PEND_DEPTH:
                status = _RING_FULL
                counters[2] = o
                break
            slot = (ring_head[o] + cnt) % _PEND_DEPTH
            ring_serial[o, slot] = serial_next
            ring_time[o, slot] = ts
            ring_val[o, slot] = out
            ring_count[o] = cnt + 1
            heap_size = _heap_push(ht, hs, hn, hv, heap_size,
                                   ts, serial_next, o, out)
            serial_next += 1
        if status != _DONE:
            break
    return status, heap_size, trace_len, serial_next, budget_left


class WaveTrace:
    """Per-probe transition lists recorded by a run.

    Transitions are (time_ps, value) pairs in time order, starting from
    the all-zero initial state.  Same-time rescheduling collapses to the
    last value.
    """

    def __init__(self, times, nets, values, probe_nets, t_end):
        self.labels = [label for _, label in probe_nets]
        self.t_end = t_end
        self._by_label = {}
        for (net, label) in probe_nets:
            sel = nets == net
            ts, vs = times[sel], values[sel]
            keep = np.ones(len(ts), dtype=bool)
            if len(ts) > 1:
                keep[:-1] = ts[1:] != ts[:-1]  # same-time collapse, last wins
            self._by_label[label] = (ts[keep], vs[keep])

    def transitions(self, label):
        ts, vs = self._by_label[label]
        return list(zip(ts.tolist(), vs.tolist()))

    def arrays(self, label):
        return self._by_label[label]

    def rising_edges(self, label):
        ts, vs = self._by_label[label]
        return ts[vs == 1]

    def value_at(self, label, t):
        ts, vs = self._by_label[label]
        i = np.searchsorted(ts, t, side="right")
        return 0 if i == 0 else int(vs[i - 1])

    def pulses(self, label):
        """(rise, fall) pairs; a final unclosed pulse is closed at t_end."""
        out = []
        rise = None
        for t, v in self.transitions(label):
            if v == 1 and rise is None:
                rise = t
            elif v == 0 and rise is not None:
                out.append((rise, t))
                rise = None
        if rise is not None:
            out.append((rise, self.t_end))
        return out

    def is_empty(self):
        return all(len(ts) == 0 for ts, _ in self._by_label.values())

    def to_csv(self):
        lines = ["time_ps,net,value"]
        rows = []
        for label, (ts, vs) in self._by_label.items():
            rows.extend((int(t), label, int(v)) for t, v in zip(ts, vs))
        rows.sort(key=lambda r: (r[0], r[1]))
        lines.extend(f"{t},{n},{v}" for t, n, v in rows)
        return "\n".join(lines) + "\n"

    def to_vcd(self, timescale="1ps", module="top"):
        ids = {}
        for i, label in enumerate(self._by_label):
            code, x = "", i
            while True:
                code += chr(33 + x % 94)
                x //= 94
                if x == 0:
                    break
            ids[label] = code
        lines = [f"$timescale {timescale} $end", f"$scope module {module} $end"]
        for label, code in ids.items():
            lines.append(f"$var wire 1 {code} {label} $end")
        lines.append("$upscope $end")
        lines.append("$enddefinitions $end")
        lines.append("$dumpvars")
        for label, code in ids.items():
            lines.append(f"0{code}")
        lines.append("$end")
        events = []
        for label, (ts, vs) in self._by_label.items():
            events.extend((int(t), ids[label], int(v)) for t, v in zip(ts, vs))
        events.sort()
        last_t = None
        for t, code, v in events:
            if t != last_t:
                lines.append(f"#{t}")
                last_t = t
            lines.append(f"{v}{code}")
        lines.append(f"#{self.t_end}")
        return "\n".join(lines) + "\n"


class Engine:
    """One sequential event-driven simulation instance.

    Instances are independent; run one per worker for parallel sweeps.
    ``reset()`` rewinds to the all-zero state without recompiling the
    netlist arrays, which is the cheap path when simulating many stimuli
    against one circuit.
    """

    def __init__(self, netlist, event_budget=50_000_000, sr_policy="hold"):
        netlist.validate()
        self.netlist = netlist
        self.event_budget = event_budget
        self.sr_policy = {"hold": 0, "set": 1, "reset": 2}[sr_policy]

        nn = netlist.num_nets
        ng = len(netlist.gates)
        self._g_kind = np.zeros(ng, np.uint8)
        self._g_in0 = np.zeros(ng, np.int32)
        self._g_in1 = np.zeros(ng, np.int32)
        self._g_in2 = np.zeros(ng, np.int32)
        self._g_out = np.zeros(ng, np.int32)
        self._g_delay = np.zeros(ng, np.int64)
        self._g_reject = np.zeros(ng, np.int64)
        self._g_param = np.zeros(ng, np.int32)
        fanout = [[] for _ in range(nn)]
        for i, g in enumerate(netlist.gates):
            self._g_kind[i] = int(g.kind)
            ins = list(g.inputs) + [0] * (3 - len(g.inputs))
            self._g_in0[i], self._g_in1[i], self._g_in2[i] = ins[:3]
            self._g_out[i] = g.output
            self._g_delay[i] = g.delay
            self._g_reject[i] = g.reject
            self._g_param[i] = g.param
            for n in set(g.inputs):
                fanout[n].append(i)
        self._fo_ptr = np.zeros(nn + 1, np.int64)
        for n in range(nn):
            self._fo_ptr[n + 1] = self._fo_ptr[n] + len(fanout[n])
        self._fo_gate = np.zeros(self._fo_ptr[-1], np.int32)
        for n in range(nn):
            self._fo_gate[self._fo_ptr[n]:self._fo_ptr[n + 1]] = fanout[n]
        self._max_fanout = max((len(f) for f in fanout), default=0)

        self._probe_mask = np.zeros(nn, bool)
        for net, _ in netlist.probes:
            self._probe_mask[net] = True
        self._stim_mask = np.zeros(nn, bool)
        for net in netlist.ports.values():
            self._stim_mask[net] = True
        self._net_labels = {}
        for label, net in netlist.ports.items():
            self._net_labels.setdefault(net, label)
        for net, label in netlist.probes:
            self._net_labels.setdefault(net, label)

        self.reset()

    def reset(self):
        nn = self.netlist.num_nets
        ng = len(self.netlist.gates)
        self._net_val = np.zeros(nn, np.uint8)
        self._g_state = np.zeros(ng, np.uint8)
        self._g_count = np.zeros(ng, np.int32)
        self._g_lastin = np.zeros(ng, np.uint8)
        cap = 1024
        self._ht = np.zeros(cap, np.int64)
        self._hs = np.zeros(cap, np.int64)
        self._hn = np.zeros(cap, np.int32)
        self._hv = np.zeros(cap, np.uint8)
        self._heap_size = 0
        self._ring_serial = np.full((nn, _PEND_DEPTH), -1, np.int64)
        self._ring_time = np.zeros((nn, _PEND_DEPTH), np.int64)
        self._ring_val = np.zeros((nn, _PEND_DEPTH), np.uint8)
        self._ring_head = np.zeros(nn, np.int32)
        self._ring_count = np.zeros(nn, np.int32)
        self._trace_t = np.zeros(4096, np.int64)
        self._trace_n = np.zeros(4096, np.int32)
        self._trace_v = np.zeros(4096, np.uint8)
        self._trace_len = 0
        self._ev_count = np.zeros(nn, np.int64)
        self._serial = 0
        self._budget_left = self.event_budget
        self._counters = np.zeros(3, np.int64)
        self.now = 0

    @property
    def sr_conflicts(self):
        return int(self._counters[1])

    def _net_name(self, net):
        return self._net_labels.get(net, f"net{net}")

    def schedule(self, time_ps, port, value):
        """Queue an external transition on a stimulus port (by label or net)."""
        if time_ps < self.now:
            raise SimulationError(
                f"cannot schedule at t={time_ps} ps, now is {self.now} ps")
        net = self.netlist.ports[port] if isinstance(port, str) else port
        if not self._stim_mask[net]:
            raise SimulationError(
                f"net {self._net_name(net)} is gate-driven, not a stimulus port")
        if self._heap_size == self._ht.shape[0]:
            self._grow_heap()
        self._heap_size = _heap_push(
            self._ht, self._hs, self._hn, self._hv, self._heap_size,
            time_ps, self._serial, net, value)
        self._serial += 1

    def schedule_pulse(self, time_ps, port, width_ps):
        self.schedule(time_ps, port, 1)
        self.schedule(time_ps + width_ps, port, 0)

    def _grow_heap(self):
        for name in ("_ht", "_hs", "_hn", "_hv"):
            a = getattr(self, name)
            b = np.zeros(2 * a.shape[0], a.dtype)
            b[:a.shape[0]] = a
            setattr(self, name, b)

    def _grow_trace(self):
        for name in ("_trace_t", "_trace_n", "_trace_v"):
            a = getattr(self, name)
            b = np.zeros(2 * a.shape[0], a.dtype)
            b[:a.shape[0]] = a
            setattr(self, name, b)

    def run_until(self, t_end):
        """Advance to ``t_end`` and return the cumulative WaveTrace.

        The engine remains usable afterwards: schedule more stimuli and
        call ``run_until`` again with a later horizon.
        """
        if t_end < self.now:
            raise SimulationError(f"t_end={t_end} precedes now={self.now}")
        while True:
            status, self._heap_size, self._trace_len, self._serial, \
                self._budget_left = _run(
                    self._net_val,
                    self._g_kind, self._g_in0, self._g_in1, self._g_in2,
                    self._g_out, self._g_delay, self._g_reject, self._g_param,
                    self._g_state, self._g_count, self._g_lastin,
                    self._fo_ptr, self._fo_gate,
                    self._ht, self._hs, self._hn, self._hv, self._heap_size,
                    self._ring_serial, self._ring_time, self._ring_val,
                    self._ring_head, self._ring_count,
                    self._trace_t, self._trace_n, self._trace_v,
                    self._trace_len,
                    self._probe_mask, self._stim_mask, self._ev_count,
                    t_end, self._serial, self._budget_left,
                    self._max_fanout, self.sr_policy,
                    self._counters)
            if status == _DONE:
                break
            if status == _NEED_HEAP:
                self._grow_heap()
            elif status == _NEED_TRACE:
                self._grow_trace()
            elif status == _BUDGET:
                hot = int(np.argmax(self._ev_count))
                raise BudgetExceeded(
                    f"event budget of {self.event_budget} exhausted; most "
                    f"active net is {self._net_name(hot)} with "
                    f"{int(self._ev_count[hot])} transitions (oscillation?)",
                    net=hot, label=self._net_labels.get(hot))
            elif status == _RING_FULL:
                o = int(self._counters[2])
                raise SimulationError(
                    f"net {self._net_name(o)} switching faster than its "
                    f"inertial window can resolve")
        self.now = t_end
        return self.trace()

    def trace(self):
        times = self._trace_t[:self._trace_len].copy()
        nets = self._trace_n[:self._trace_len]
        vals = self._trace_v[:self._trace_len]
        return WaveTrace(times, nets, vals, self.netlist.probes, self.now)

    @property
    def events_applied(self):
        return int(self._counters[0])
