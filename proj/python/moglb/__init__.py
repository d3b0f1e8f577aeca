# Copyright 2026 The moglb Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Multi-objective generalized linear bandits (C++ core)."""

from moglb._core import (
    Algorithm,
    ExperimentConfig,
    LinkBounds,
    LinkKind,
    MoglbUcb,
    ProblemInstance,
    Rng,
    SpdState,
    ball_project,
    checkpoints,
    derive_bounds,
    dominates,
    generate_instance,
    instance_from_json,
    jaccard,
    link_value,
    pareto_front,
    psg,
    psg_table,
    records_to_csv,
    run_experiment,
    theoretical_gamma,
    tune_gamma,
)

__version__ = "0.1.0"
