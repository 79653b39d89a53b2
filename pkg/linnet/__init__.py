from linnet.exactla import RMatrix, Subspace

from linnet.quiver import Vertex, MultidegreeFrame, hull

from linnet.net import NetPresentation, ArrowRef, CheckReport, check_all

from linnet.analysis import decompose, DecompositionResult, ViolationCertificate

from linnet.cli import App

from linnet.util import (NetError, ParseError, WindowInsufficient, NotASubnet, PreconditionError,
                         DecompositionError)
