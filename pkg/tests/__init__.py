"""Test suite for tmsverify."""


