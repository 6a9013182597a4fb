#pragma once

#include "sheafdist/barcode.hpp"
#include "sheafdist/bottleneck.hpp"
#include "sheafdist/convolution.hpp"
#include "sheafdist/cost.hpp"
#include "sheafdist/error.hpp"
#include "sheafdist/hom.hpp"
#include "sheafdist/interpolation.hpp"
#include "sheafdist/interval.hpp"
#include "sheafdist/persistence.hpp"
