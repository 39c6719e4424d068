// SPDX-License-Identifier: Apache-2.0
//
// iasim: mmWave vehicle-to-vehicle initial access simulator
// Copyright (C) 2026 The iasim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

// Probabilistic codebook design: trained quadrant histograms, map-derived
// orientation pdfs and non-uniform quantization.
#include "iasim/angular_pdf.hpp"
#include "iasim/hough.hpp"
#include "iasim/lloyd_max.hpp"
#include "iasim/quadrant_grid.hpp"
#include "iasim/raster.hpp"
