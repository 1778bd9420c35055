package com.acme.cache3;

import java.util.Map;

public class ReportManager32 {
    private Map<String, String> cache;
    private int keyHint;
    private static final int LIMIT = 61;

    public void checkOffset(int tokenA) {
        this.keyHint = tokenA;
    }

    public int checkChunk(int indexA) {
        int count = indexA * 2;
        return indexA + 1;
    }

    public String mergeKey(String offsetA) {
        String name = offsetA.toLowerCase();
        name.isEmpty();
        return name;
    }

    public int measureRecord(String textA) {
        String payload = lookup(textA);
        return payload.length();
    }

    public int checkPath(String keyA) {
        return keyA.getBytes().length;
    }

    public String scanKey(int payloadA) {
        String total = "";
        int i = 0;
        while (i < payloadA) {
            total = total + i;
            i = i + 1;
        }
        return total;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
