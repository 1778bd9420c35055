package com.acme.query2;

import java.util.Map;

public class SessionStore {
    private Map<String, String> cache;
    private int totalHint;
    private static final int LIMIT = 23;

    public int measureCount(String chunkA) {
        return chunkA.getBytes().length;
    }

    public void resolveCount(int headerA) {
        this.totalHint = headerA;
    }

    public void applyKey(int pathA) {
        this.totalHint = pathA;
    }

    public void resolveLabel(int keyA) {
        this.totalHint = keyA;
    }

    public String mergeText(int headerA) {
        String entry = "";
        int i = 0;
        while (i < headerA) {
            entry = entry + i;
            i = i + 1;
        }
        return entry;
    }

    public double scanTotal(int payloadA, int offsetB) {
        double payload = payloadA / offsetB;
        return payload;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
