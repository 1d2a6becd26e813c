// Copyright 2026 the dephasim authors
// SPDX-License-Identifier: Apache-2.0
//
// Umbrella header pulling in the whole library.

#pragma once

#include "dephasim/bath.hpp"
#include "dephasim/channel.hpp"
#include "dephasim/fidelity.hpp"
#include "dephasim/io.hpp"
#include "dephasim/mbqc.hpp"
#include "dephasim/reproduce.hpp"
#include "dephasim/scheduler.hpp"
#include "dephasim/states.hpp"
#include "dephasim/tensor.hpp"
